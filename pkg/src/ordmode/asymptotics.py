"""Float evaluation of the asymptotic laws against exact values and modes.

Value laws (log-space, natural logs throughout):

    r-Fubini:        F_{n,r} ~ n! n^r / (2 · ln^{r+1}(2) · ln^n(2))
    Whitney-Fubini:  F_m(n)  ~ m(1+m)^{1/m-1}/ln(m+1) · m^n n! / ln^n(m+1)

Mode laws (coefficient of n):

    ordered Stirling / r-Stirling:  1 / (2 ln 2)
    ordered Whitney:                m / ((m+1) ln(m+1))
    classical Stirling row S(n,·):  n / ln n   (separate helper; converges
                                                 notoriously slowly)

All comparisons happen in log space. The log of an exact integer is taken
from its bit length plus a 64-bit leading mantissa, so its relative error
(~2^-50) is negligible against the O(1/n) asymptotic gaps being measured,
and log n! is the log of the exact factorial, never a gamma approximation
— the residual is purely the law's own error.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterable

from . import modes, polynomials
from .triangles import R_STIRLING, STIRLING, TriangleFamily

__all__ = [
    "AsymptoticModel",
    "ConvergenceRow",
    "log_bigint",
    "predicted_log_value",
    "predicted_mode",
    "predicted_mode_classical",
    "convergence_table",
    "thread_count",
]

_LOG2 = math.log(2.0)

THREADS_ENV_VAR = "ORDMODE_THREADS"


def log_bigint(x: int) -> float:
    """Natural log of a positive integer, relative error well under 2^-45."""
    if x <= 0:
        raise ValueError("need x > 0")
    bits = x.bit_length()
    if bits <= 64:
        return math.log(x)
    shift = bits - 64
    return math.log(x >> shift) + shift * _LOG2


@dataclass(frozen=True)
class AsymptoticModel:
    """Log-space value law and mode-law coefficient for one family.

    predicted log value = log n! + n_power·log n + n·log_growth + log_prefactor
    predicted mode      = n · mode_coefficient
    """

    family: TriangleFamily
    n_power: int
    log_growth: float
    log_prefactor: float
    mode_coefficient: float

    @classmethod
    def for_family(cls, family: TriangleFamily) -> AsymptoticModel:
        if family.kind in (STIRLING, R_STIRLING):
            r = family.param
            return cls(
                family=family,
                n_power=r,
                log_growth=-math.log(_LOG2),
                log_prefactor=-(_LOG2 + (r + 1) * math.log(_LOG2)),
                mode_coefficient=1.0 / (2.0 * _LOG2),
            )
        m = family.param
        log_m1 = math.log(m + 1.0)
        return cls(
            family=family,
            n_power=0,
            log_growth=math.log(m) - math.log(log_m1),
            log_prefactor=math.log(m) + (1.0 / m - 1.0) * log_m1 - math.log(log_m1),
            mode_coefficient=m / ((m + 1.0) * log_m1),
        )


def predicted_log_value(model: AsymptoticModel, n: int) -> float:
    """Log of the value law's prediction at n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (
        log_bigint(factorial(n))
        + model.n_power * math.log(n)
        + n * model.log_growth
        + model.log_prefactor
    )


def predicted_mode(model: AsymptoticModel, n: int) -> float:
    """The ordered-family mode law n·coefficient."""
    if n < 2:
        raise ValueError("need n >= 2")
    return n * model.mode_coefficient


def predicted_mode_classical(n: int) -> float:
    """The classical (unordered) Stirling row mode law n/log n."""
    if n < 2:
        raise ValueError("need n >= 2")
    return n / math.log(n)


@dataclass(frozen=True)
class ConvergenceRow:
    """Exact value/mode at one n next to the law's predictions."""

    n: int
    exact_log: float
    predicted_log: float
    value_ratio: float
    exact_mode: int
    predicted_mode: float
    mode_ratio: float


def thread_count(explicit: int | None = None) -> int:
    """Fan-out width: explicit argument, else ORDMODE_THREADS, else 0 (sequential)."""
    if explicit is not None:
        value = explicit
    else:
        raw = os.environ.get(THREADS_ENV_VAR, "0")
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError("thread count must be >= 0")
    return value


def _family_polynomials(family: TriangleFamily):
    if family.kind in (STIRLING, R_STIRLING):
        return polynomials.r_fubini_polynomials(family.param)
    return polynomials.whitney_fubini_polynomials(family.param)


def convergence_table(
    family: TriangleFamily,
    n_grid: Iterable[int],
    threads: int | None = None,
) -> list[ConvergenceRow]:
    """One ConvergenceRow per grid point, in ascending n order.

    The polynomial recurrence is walked once up to max(n_grid); per-row
    log-space work then fans out over up to `threads` workers (resolved
    through ORDMODE_THREADS when not given). Row values are independent
    of the fan-out width, and the output order is always by n.
    """
    grid = [int(n) for n in n_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("n_grid must be strictly ascending")
    if grid and grid[0] < 2:
        raise ValueError("all grid points must be >= 2")
    if not grid:
        return []
    workers = thread_count(threads)
    model = AsymptoticModel.for_family(family)

    wanted = set(grid)
    polys = {}
    for n, p in enumerate(_family_polynomials(family)):
        if n in wanted:
            polys[n] = p
        if n >= grid[-1]:
            break

    def build_row(n: int) -> ConvergenceRow:
        p = polys[n]
        exact_log = log_bigint(p.eval_at_one())
        pred_log = predicted_log_value(model, n)
        mode, _ = modes.mode_of(p.coeffs)
        pred_mode = predicted_mode(model, n)
        return ConvergenceRow(
            n=n,
            exact_log=exact_log,
            predicted_log=pred_log,
            value_ratio=math.exp(exact_log - pred_log),
            exact_mode=mode,
            predicted_mode=pred_mode,
            mode_ratio=mode / pred_mode,
        )

    if workers == 0:
        rows = [build_row(n) for n in grid]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(build_row, grid))
    return sorted(rows, key=lambda row: row.n)
