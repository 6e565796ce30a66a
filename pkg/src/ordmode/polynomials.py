"""Exact integer polynomials: Fubini-type recurrences and Sturm certificates.

The two generating families live here.

    r-Fubini:        F_0 = r!,  F_n = x[(r+1)F_{n-1} + (1+x)F'_{n-1}] + r F_{n-1}
    Whitney-Fubini:  F_0 = 1,   F_n = (x+1)F_{n-1} + (x^2 + mx)F'_{n-1}

Coefficient k of the n-th polynomial is the ordered triangle entry
(k+r)!·S_r(n,k) resp. k!·W_m(n,k); the test suite pins that equality
against the triangles module and the EGF oracle.

Root certification uses Sturm chains over the integers. Remainders are
kept as signed primitive parts (content divided out, sign preserved):
sign variations are invariant under positive scaling, and the primitive
reduction is what keeps chain coefficients from exploding. Sturm counts
distinct roots only, so multiple roots are handled by Yun's squarefree
decomposition and certified factor by factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import factorial, gcd
from typing import Iterator

__all__ = [
    "IntPolynomial",
    "RootCertificate",
    "r_fubini_polynomials",
    "r_fubini_poly",
    "whitney_fubini_polynomials",
    "whitney_fubini_poly",
    "squarefree_part",
    "squarefree_decomposition",
    "sturm_chain",
    "sturm_count",
    "certify_real_rooted_in_interval",
]


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[k] multiplies x^k, trailing zeros trimmed.

    The zero polynomial is the empty tuple and has degree -1.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(list(self.coeffs)))

    @classmethod
    def from_coefficients(cls, values) -> IntPolynomial:
        return cls(tuple(int(v) for v in values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(tuple(c * a for a in self.coeffs))

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def __call__(self, x0) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x0 = Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc


def r_fubini_polynomials(r: int) -> Iterator[IntPolynomial]:
    """Yield the r-Fubini polynomials for n = 0, 1, 2, ..."""
    if r < 0:
        raise ValueError("r must be >= 0")
    f = IntPolynomial((factorial(r),))
    while True:
        yield f
        d = f.derivative()
        inner = f.scale(r + 1) + d + d.shift(1)
        f = inner.shift(1) + f.scale(r)


def r_fubini_poly(r: int, n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    return next(islice(r_fubini_polynomials(r), n, None))


def whitney_fubini_polynomials(m: int) -> Iterator[IntPolynomial]:
    """Yield the Whitney-Fubini polynomials for n = 0, 1, 2, ..."""
    if m < 1:
        raise ValueError("m must be >= 1")
    f = IntPolynomial((1,))
    while True:
        yield f
        d = f.derivative()
        f = f + f.shift(1) + d.shift(2) + d.scale(m).shift(1)


def whitney_fubini_poly(m: int, n: int) -> IntPolynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    return next(islice(whitney_fubini_polynomials(m), n, None))


# ----------------------------------------------------------------------
# Sturm machinery. Internal helpers work on raw coefficient lists.


def _content(coeffs) -> int:
    c = 0
    for a in coeffs:
        c = gcd(c, a)
        if c == 1:
            break
    return c


def _primitive(coeffs) -> tuple[int, ...]:
    """Divide out the content; sign is preserved."""
    coeffs = _trim(list(coeffs))
    c = _content(coeffs)
    if c > 1:
        return tuple(a // c for a in coeffs)
    return coeffs


def _deriv(coeffs):
    return _trim([k * c for k, c in enumerate(coeffs) if k])


def _pseudo_rem(a, b) -> tuple[int, ...]:
    """A positive integer multiple of (a mod b), b nonzero.

    Plain pseudo-division multiplies by lc(b) once per cancellation step;
    if the accumulated multiplier came out negative it is flipped, so the
    result always has the sign of the true remainder.
    """
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        sh = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[sh + i] -= lr * bc
        r = list(_trim(r))
        steps += 1
    if lb < 0 and steps % 2:
        r = [-c for c in r]
    return tuple(r)


def _poly_gcd(a, b) -> tuple[int, ...]:
    """Primitive gcd with positive leading coefficient; gcd(p, 0) = primitive p."""
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    if a and a[-1] < 0:
        a = tuple(-c for c in a)
    return a


def _exact_div(a, b) -> tuple[int, ...]:
    """Quotient a/b when the division is exact over the integers."""
    a = list(a)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, rem = divmod(a[i + len(b) - 1], b[-1])
        if rem:
            raise ArithmeticError("polynomial division expected to be exact")
        q[i] = c
        for j, bc in enumerate(b):
            a[i + j] -= c * bc
    if any(a):
        raise ArithmeticError("polynomial division expected to be exact")
    return _trim(q)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """The radical p / gcd(p, p'), primitive, same distinct roots as p."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    prim = _primitive(p.coeffs)
    if len(prim) <= 2:
        return IntPolynomial(prim)
    g = _poly_gcd(prim, _deriv(prim))
    if len(g) == 1:
        return IntPolynomial(prim)
    return IntPolynomial(_primitive(_exact_div(prim, g)))


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: [(q_i, i)] with p = const · prod q_i^i, q_i squarefree.

    Factors are primitive; constant factors are dropped, so the returned
    multiplicities account for every root of p: sum i·deg(q_i) = deg p.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    prim = _primitive(p.coeffs)
    if len(prim) == 1:
        return []
    dp = _deriv(prim)
    g = _poly_gcd(prim, dp)
    if len(g) == 1:
        return [(IntPolynomial(prim), 1)]
    out: list[tuple[IntPolynomial, int]] = []
    c = _exact_div(prim, g)
    d = _trim([x - y for x, y in _zip_pad(_exact_div(dp, g), _deriv(c))])
    i = 1
    while len(c) > 1:
        a = _poly_gcd(c, d)
        if len(a) > 1:
            out.append((IntPolynomial(a), i))
        c = _exact_div(c, a)
        d = _trim([x - y for x, y in _zip_pad(_exact_div(d, a), _deriv(c))])
        i += 1
    return out


def _zip_pad(a, b):
    la, lb = len(a), len(b)
    n = max(la, lb)
    for i in range(n):
        yield (a[i] if i < la else 0), (b[i] if i < lb else 0)


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of the squarefree part of p.

    Starts with the squarefree part and its derivative; each later entry
    is the negated remainder of the two before it, reduced to its signed
    primitive part.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = squarefree_part(p).coeffs
    chain = [sf]
    d = _primitive(_deriv(sf))
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        r = _pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-c for c in r]))
    return [IntPolynomial(c) for c in chain]


def _sign_at(coeffs, num: int, den: int) -> int:
    """Sign of p(num/den) for den > 0, via homogeneous integer Horner."""
    s = 0
    dp = 1
    for c in reversed(coeffs):
        s = s * num + c * dp
        dp *= den
    return (s > 0) - (s < 0)


def _variations(chain, num: int, den: int) -> int:
    signs = [s for p in chain if (s := _sign_at(p.coeffs, num, den))]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sign_at_infinity(coeffs, negative: bool) -> int:
    lead = 1 if coeffs[-1] > 0 else -1
    if negative and (len(coeffs) - 1) % 2:
        return -lead
    return lead


def _variations_at_infinity(chain, negative: bool) -> int:
    signs = [_sign_at_infinity(p.coeffs, negative) for p in chain]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count(p: IntPolynomial, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Endpoints are exact rationals; the count comes from the sign-variation
    difference of the Sturm chain, so a root exactly at `hi` is included
    and one at `lo` is not.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    chain = sturm_chain(p)
    return _variations(chain, lo.numerator, lo.denominator) - _variations(
        chain, hi.numerator, hi.denominator
    )


@dataclass(frozen=True)
class RootCertificate:
    """Outcome of interval root certification.

    `ok` means: after stripping the x^j factor, every root of the rest is
    real and lies in the open interval (-1, 0) — equivalently all roots of
    the input are real and in (-1, 0], the zero root with multiplicity j.
    `all_roots_real` certifies just real-rootedness (Darroch's actual
    precondition) with no interval constraint; families whose roots dip
    below -1 (the Whitney ones do, already at m=2, n=2 whose roots are
    -1 ± 1/sqrt(2)) get all_roots_real=True, ok=False.

    `distinct_roots_in_interval` counts distinct nonzero roots in (-1, 0);
    `distinct_real_roots` counts all distinct real roots including zero.
    """

    ok: bool
    all_roots_real: bool
    zero_root_multiplicity: int
    distinct_roots_in_interval: int
    distinct_real_roots: int
    degree: int


def certify_real_rooted_in_interval(p: IntPolynomial) -> RootCertificate:
    """Certify that all roots of p are real and lie in (-1, 0].

    The zero root is factored out first and reported separately. The
    remainder is split into squarefree factors and each factor's distinct
    roots are counted by Sturm, both inside (-1, 0) and over all of R; the
    interval verdict holds iff every factor has all of its degree-many
    roots inside, which also forces the with-multiplicity count to match
    deg p.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    j = 0
    while p.coeffs[j] == 0:
        j += 1
    stripped = IntPolynomial(p.coeffs[j:])
    if stripped.degree == 0:
        return RootCertificate(True, True, j, 0, 1 if j else 0, p.degree)
    ok = True
    all_real = True
    inside_total = 0
    real_total = 1 if j else 0
    for factor, _mult in squarefree_decomposition(stripped):
        chain = sturm_chain(factor)
        # stripped(0) != 0, so the (-1, 0] count equals the open-interval count
        inside = _variations(chain, -1, 1) - _variations(chain, 0, 1)
        n_real = _variations_at_infinity(chain, True) - _variations_at_infinity(
            chain, False
        )
        inside_total += inside
        real_total += n_real
        if inside != factor.degree:
            ok = False
        if n_real != factor.degree:
            all_real = False
    return RootCertificate(ok, all_real, j, inside_total, real_total, p.degree)
