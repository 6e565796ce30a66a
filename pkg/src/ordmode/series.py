"""Truncated power series over exact rationals.

A series is a fixed-length tuple of Fractions: the coefficients of
t^0 .. t^N for truncation order N. Every arithmetic result is truncated
back to the same order, and nothing is ever rounded — this module is the
exact oracle the integer recurrences elsewhere are validated against, so
it must not share code with them.

The two extraction helpers read Fubini-type counting sequences off their
exponential generating functions:

    r-Fubini:        sum_n F_{n,r} t^n/n!  =  r! e^{rt} / (2 - e^t)^{r+1}
    Whitney-Fubini:  sum_n F_m(n) t^n/n!   =  e^t / (1 - (e^{mt} - 1)/m)

Both return plain ints; a non-integral n!·[t^n] means a bug, never data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "RationalSeries",
    "factorial",
    "r_fubini_numbers",
    "whitney_fubini_numbers",
]

_RationalLike = int | Fraction


@dataclass(frozen=True)
class RationalSeries:
    """A power series truncated at a fixed order, with Fraction coefficients."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the t^0 term")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    @classmethod
    def from_coefficients(cls, values, order: int | None = None) -> RationalSeries:
        """Build a series from low-order coefficients, zero-padded to `order`."""
        coeffs = [Fraction(v) for v in values]
        if order is not None:
            if order + 1 < len(coeffs):
                raise ValueError("more coefficients than the requested order allows")
            coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: _RationalLike, order: int) -> RationalSeries:
        return cls.from_coefficients([value], order)

    @classmethod
    def one(cls, order: int) -> RationalSeries:
        return cls.constant(1, order)

    @classmethod
    def exponential(cls, rate: int, order: int) -> RationalSeries:
        """The series of e^{rate·t}: coefficients rate^j / j! up to t^order."""
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = []
        num = 1
        for j in range(order + 1):
            coeffs.append(Fraction(num, factorial(j)))
            num *= rate
        return cls(tuple(coeffs))

    def _check_same_order(self, other: RationalSeries) -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: RationalSeries) -> RationalSeries:
        self._check_same_order(other)
        return RationalSeries(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: RationalSeries) -> RationalSeries:
        self._check_same_order(other)
        return RationalSeries(
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def scale(self, c: _RationalLike) -> RationalSeries:
        c = Fraction(c)
        return RationalSeries(tuple(c * a for a in self.coefficients))

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        """Cauchy product, truncated at the common order."""
        self._check_same_order(other)
        n = self.order
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return RationalSeries(tuple(out))

    def __truediv__(self, other: RationalSeries) -> RationalSeries:
        """Series q with q·other == self up to truncation.

        Requires an invertible divisor (nonzero constant term); the
        quotient is produced by the usual forward substitution.
        """
        self._check_same_order(other)
        if other.coefficients[0] == 0:
            raise ZeroDivisionError("divisor has zero constant term")
        n = self.order
        a, b = self.coefficients, other.coefficients
        b0 = b[0]
        q = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            acc = a[k]
            for j in range(1, k + 1):
                if b[j]:
                    acc -= b[j] * q[k - j]
            q[k] = acc / b0
        return RationalSeries(tuple(q))

    def __pow__(self, e: int) -> RationalSeries:
        """Truncated e-th power; e == 0 gives the one-series."""
        if e < 0:
            raise ValueError("exponent must be >= 0")
        result = RationalSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


def _integerize_egf(series: RationalSeries, what: str) -> list[int]:
    """Turn [t^n] into n!·[t^n], insisting every entry is an integer."""
    out = []
    for n, c in enumerate(series.coefficients):
        v = c * factorial(n)
        if v.denominator != 1:
            raise ArithmeticError(
                f"non-integral coefficient {v} at n={n} in {what}; "
                "this signals an implementation bug"
            )
        out.append(v.numerator)
    return out


def r_fubini_numbers(r: int, n_max: int) -> list[int]:
    """F_{0,r} .. F_{n_max,r} extracted from r! e^{rt} / (2 - e^t)^{r+1}."""
    if r < 0:
        raise ValueError("r must be >= 0")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    numer = RationalSeries.exponential(r, n_max).scale(factorial(r))
    denom = (RationalSeries.constant(2, n_max) - RationalSeries.exponential(1, n_max)) ** (r + 1)
    return _integerize_egf(numer / denom, f"r-Fubini EGF (r={r})")


def whitney_fubini_numbers(m: int, n_max: int) -> list[int]:
    """F_m(0) .. F_m(n_max) extracted from e^t / (1 - (e^{mt} - 1)/m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    # (e^{mt} - 1)/m stays exact: the division just rescales Fractions.
    growth = (RationalSeries.exponential(m, n_max) - RationalSeries.one(n_max)).scale(
        Fraction(1, m)
    )
    denom = RationalSeries.one(n_max) - growth
    numer = RationalSeries.exponential(1, n_max)
    return _integerize_egf(numer / denom, f"Whitney-Fubini EGF (m={m})")
