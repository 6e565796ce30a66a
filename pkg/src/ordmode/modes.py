"""Mode location, strict log-concavity, and Darroch localization.

Everything is decided in exact integer/rational arithmetic. Darroch's
theorem: if p(x) = a_0 + a_1 x + ... + a_n x^n has only real zeros and
p(1) > 0, the coefficient sequence is strictly log-concave and its
smallest mode M satisfies |M - p'(1)/p(1)| < 1. The comparison against 1
is done on Fractions, so there are no boundary false positives.

Strict log-concavity (SLC) is checked over the positive support: the
support must be contiguous and a_k^2 > a_{k-1}·a_{k+1} must hold at every
interior index of it. Leading zeros (the k=0 entry of the r=0 families)
therefore never poison the interior comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import IntPolynomial
from .triangles import build_triangle, stirling

__all__ = [
    "ModeReport",
    "mode_of",
    "is_strictly_log_concave",
    "darroch_localize",
    "r_fubini_darroch_mean",
    "whitney_darroch_mean",
    "wegner_check",
]


def mode_of(seq) -> tuple[int, int]:
    """(smallest index of the maximum, length of the maximal plateau)."""
    seq = list(seq)
    if not seq:
        raise ValueError("empty sequence")
    if all(v == 0 for v in seq):
        raise ValueError("all-zero sequence")
    best = max(seq)
    mode = seq.index(best)
    plateau = 1
    while mode + plateau < len(seq) and seq[mode + plateau] == best:
        plateau += 1
    return mode, plateau


def is_strictly_log_concave(seq) -> tuple[bool, int | None]:
    """SLC verdict plus the first violating index (None when SLC holds)."""
    seq = list(seq)
    if not seq:
        raise ValueError("empty sequence")
    support = [i for i, v in enumerate(seq) if v > 0]
    if not support:
        return True, None
    if support[-1] - support[0] + 1 != len(support):
        first_gap = next(
            i for i in range(support[0], support[-1]) if seq[i] <= 0
        )
        return False, first_gap
    for i in support[1:-1]:
        if seq[i] * seq[i] <= seq[i - 1] * seq[i + 1]:
            return False, i
    return True, None


@dataclass(frozen=True)
class ModeReport:
    """Mode of a coefficient sequence together with its Darroch certificate."""

    mode_index: int
    plateau_length: int
    slc: bool
    darroch_mean: Fraction
    darroch_bound_holds: bool


def darroch_localize(p: IntPolynomial) -> ModeReport:
    """Locate the mode of p's coefficients and check |mode - p'(1)/p(1)| < 1.

    The caller is responsible for p being real-rooted (certified
    separately); nonnegative coefficients with p(1) > 0 are assumed.
    """
    total = p.eval_at_one()
    if total <= 0:
        raise ValueError("need p(1) > 0")
    mean = Fraction(p.derivative().eval_at_one(), total)
    mode, plateau = mode_of(p.coeffs)
    slc, _ = is_strictly_log_concave(p.coeffs)
    holds = abs(mode - mean) < 1
    return ModeReport(mode, plateau, slc, mean, holds)


def r_fubini_darroch_mean(f_n: int, f_next: int, r: int) -> Fraction:
    """p'(1)/p(1) for the n-th r-Fubini polynomial from the two values
    F_{n,r} and F_{n+1,r}: (F_{n+1,r} - (2r+1)·F_{n,r}) / (2·F_{n,r})."""
    if f_n == 0:
        raise ZeroDivisionError("F_{n,r} must be positive")
    return Fraction(f_next - (2 * r + 1) * f_n, 2 * f_n)


def whitney_darroch_mean(f_n: int, f_next: int, m: int) -> Fraction:
    """Whitney analog: (F_m(n+1) - 2·F_m(n)) / ((m+1)·F_m(n)).

    Follows from evaluating the Whitney-Fubini recurrence at x=1, which
    gives (m+1)·F'_m(n,1) = F_m(n+1) - 2·F_m(n).
    """
    if f_n == 0:
        raise ZeroDivisionError("F_m(n) must be positive")
    return Fraction(f_next - 2 * f_n, (m + 1) * f_n)


def wegner_check(n_max: int) -> list[int]:
    """Scan S(n,·) for 3 <= n <= n_max; return every n whose mode is not unique.

    Wegner's conjecture (maximum unique for n > 2) predicts an empty list;
    n = 2 is excluded by contract because S(2,1) = S(2,2) = 1 ties.
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    t = build_triangle(stirling(), n_max)
    offenders = []
    for n in range(3, n_max + 1):
        _, plateau = mode_of(t.rows[n])
        if plateau != 1:
            offenders.append(n)
    return offenders
