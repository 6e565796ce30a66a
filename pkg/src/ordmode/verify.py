"""Cross-validation suites behind the `verify` command.

Each suite pits two independent routes to the same exact numbers against
each other (generating-function oracle vs. polynomial recurrence vs.
triangle rows) or scans a structural identity over a grid. `quick` runs
n <= 30 grids for a fast smoke check; `full` runs the grids the
acceptance tests use.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import series
from .modes import wegner_check
from .polynomials import r_fubini_polynomials, whitney_fubini_polynomials
from .triangles import (
    build_triangle,
    check_r0_equals_stirling,
    check_w1_equals_stirling_shift,
    ordered_row,
    r_stirling,
    whitney,
)

__all__ = ["SuiteResult", "run_suites", "SUITE_NAMES"]

SUITE_NAMES = (
    "egf-vs-recurrence",
    "w1-stirling-shift",
    "r0-reduction",
    "derivative-identities",
    "wegner-scan",
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str


def _suite_egf_vs_recurrence(n_max: int, r_max: int, m_max: int) -> SuiteResult:
    """EGF coefficients vs. polynomial values vs. ordered triangle rows.

    Also covers the shift identity F_{n,1} = F_{n+1,0} forced by
    d/dt (2-e^t)^{-1} = e^t (2-e^t)^{-2}.
    """
    checks = 0
    for r in range(r_max + 1):
        oracle = series.r_fubini_numbers(r, n_max)
        tri = build_triangle(r_stirling(r), n_max)
        gen = r_fubini_polynomials(r)
        for n in range(n_max + 1):
            p = next(gen)
            row = ordered_row(tri, n)
            if p.eval_at_one() != oracle[n]:
                return SuiteResult(
                    "egf-vs-recurrence", False, checks,
                    f"value mismatch at r={r}, n={n}",
                )
            if tuple(p.coeffs) + (0,) * (n + 1 - len(p.coeffs)) != row:
                return SuiteResult(
                    "egf-vs-recurrence", False, checks,
                    f"coefficient mismatch at r={r}, n={n}",
                )
            checks += 2
    fub0 = series.r_fubini_numbers(0, n_max + 1)
    fub1 = series.r_fubini_numbers(1, n_max)
    for n in range(n_max + 1):
        if fub1[n] != fub0[n + 1]:
            return SuiteResult(
                "egf-vs-recurrence", False, checks, f"shift identity fails at n={n}"
            )
        checks += 1
    for m in range(1, m_max + 1):
        oracle = series.whitney_fubini_numbers(m, n_max)
        tri = build_triangle(whitney(m), n_max)
        gen = whitney_fubini_polynomials(m)
        for n in range(n_max + 1):
            p = next(gen)
            row = ordered_row(tri, n)
            if p.eval_at_one() != oracle[n]:
                return SuiteResult(
                    "egf-vs-recurrence", False, checks,
                    f"value mismatch at m={m}, n={n}",
                )
            if tuple(p.coeffs) + (0,) * (n + 1 - len(p.coeffs)) != row:
                return SuiteResult(
                    "egf-vs-recurrence", False, checks,
                    f"coefficient mismatch at m={m}, n={n}",
                )
            checks += 2
    return SuiteResult(
        "egf-vs-recurrence", True, checks,
        f"n<={n_max}, r<={r_max}, m<={m_max}",
    )


def _suite_w1(n_max: int) -> SuiteResult:
    ok, failure = check_w1_equals_stirling_shift(n_max)
    detail = f"W_1(n,k)=S(n+1,k+1) for n<={n_max}" if ok else f"fails at {failure}"
    return SuiteResult("w1-stirling-shift", ok, (n_max + 1) * (n_max + 2) // 2, detail)


def _suite_r0(n_max: int) -> SuiteResult:
    ok, failure = check_r0_equals_stirling(n_max)
    detail = f"S_0(n,k)=S(n,k) for n<={n_max}" if ok else f"fails at {failure}"
    return SuiteResult("r0-reduction", ok, (n_max + 1) * (n_max + 2) // 2, detail)


def _suite_derivative_identities(n_max: int, r_max: int, m_max: int) -> SuiteResult:
    """At x=1: 2F'_{n,r} = F_{n+1,r} - (2r+1)F_{n,r} and the Whitney analog
    (m+1)F'_m(n) = F_m(n+1) - 2F_m(n). These are x=1 statements only — the
    r-Fubini relation is false as a polynomial identity."""
    checks = 0
    for r in range(r_max + 1):
        gen = r_fubini_polynomials(r)
        prev = next(gen)
        for n in range(n_max + 1):
            cur = next(gen)
            lhs = 2 * prev.derivative().eval_at_one()
            rhs = cur.eval_at_one() - (2 * r + 1) * prev.eval_at_one()
            if lhs != rhs:
                return SuiteResult(
                    "derivative-identities", False, checks, f"r={r}, n={n}"
                )
            checks += 1
            prev = cur
    for m in range(1, m_max + 1):
        gen = whitney_fubini_polynomials(m)
        prev = next(gen)
        for n in range(n_max + 1):
            cur = next(gen)
            lhs = (m + 1) * prev.derivative().eval_at_one()
            rhs = cur.eval_at_one() - 2 * prev.eval_at_one()
            if lhs != rhs:
                return SuiteResult(
                    "derivative-identities", False, checks, f"m={m}, n={n}"
                )
            checks += 1
            prev = cur
    return SuiteResult(
        "derivative-identities", True, checks,
        f"x=1, n<={n_max}, r<={r_max}, m<={m_max}",
    )


def _suite_wegner(n_max: int) -> SuiteResult:
    offenders = wegner_check(n_max)
    if offenders:
        return SuiteResult(
            "wegner-scan", False, n_max - 2, f"non-unique modes at n={offenders}"
        )
    return SuiteResult(
        "wegner-scan", True, n_max - 2, f"no counterexample <= {n_max}"
    )


def run_suites(depth: str = "quick") -> list[SuiteResult]:
    """Run every suite at the requested depth; quick ~ n<=30 grids."""
    if depth == "quick":
        return [
            _suite_egf_vs_recurrence(30, 3, 3),
            _suite_w1(30),
            _suite_r0(30),
            _suite_derivative_identities(30, 3, 3),
            _suite_wegner(30),
        ]
    if depth == "full":
        return [
            _suite_egf_vs_recurrence(40, 5, 5),
            _suite_w1(60),
            _suite_r0(60),
            _suite_derivative_identities(200, 5, 5),
            _suite_wegner(300),
        ]
    raise ValueError("depth must be 'quick' or 'full'")
