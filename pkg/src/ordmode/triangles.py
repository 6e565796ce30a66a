"""Exact triangles of Stirling, r-Stirling, and Whitney numbers.

All three triangles share the shape T(0,0) = 1, T(n,k) = 0 outside
0 <= k <= n, and a first-order recurrence that differs only in the
weight multiplying the "stay" term:

    Stirling:     T(n,k) = T(n-1,k-1) +     k · T(n-1,k)
    r-Stirling:   T(n,k) = T(n-1,k-1) + (k+r) · T(n-1,k)
    Whitney(m):   T(n,k) = T(n-1,k-1) + (mk+1) · T(n-1,k)

Rows are indexed from k = 0 and include the k = 0 entry (S_r(n,0) = r^n,
W_m(n,0) = 1): the generating functions force a nonzero constant term, so
dropping it would break the row-sum identities checked in the test suite.

The ordered variant of a row multiplies entry k by (k+shift)! where the
shift is r for the r-Stirling family and 0 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

__all__ = [
    "TriangleFamily",
    "Triangle",
    "stirling",
    "r_stirling",
    "whitney",
    "build_triangle",
    "ordered_row",
    "check_w1_equals_stirling_shift",
    "check_r0_equals_stirling",
]

STIRLING = "stirling"
R_STIRLING = "r-stirling"
WHITNEY = "whitney"


@dataclass(frozen=True)
class TriangleFamily:
    """One of the three triangle families, with its parameter.

    `param` is r for r-Stirling (r >= 0), m for Whitney (m >= 1), and
    ignored-as-zero for plain Stirling.
    """

    kind: str
    param: int = 0

    def __post_init__(self):
        if self.kind == STIRLING:
            if self.param != 0:
                raise ValueError("the Stirling family takes no parameter")
        elif self.kind == R_STIRLING:
            if self.param < 0:
                raise ValueError("r must be >= 0")
        elif self.kind == WHITNEY:
            if self.param < 1:
                raise ValueError("m must be >= 1")
        else:
            raise ValueError(f"unknown family kind: {self.kind!r}")

    def weight(self, k: int) -> int:
        """Multiplier of T(n-1,k) in the recurrence."""
        if self.kind == STIRLING:
            return k
        if self.kind == R_STIRLING:
            return k + self.param
        return self.param * k + 1

    @property
    def ordered_shift(self) -> int:
        """Ordered rows use (k+shift)!: r for r-Stirling, else 0."""
        return self.param if self.kind == R_STIRLING else 0

    @property
    def label(self) -> str:
        if self.kind == STIRLING:
            return STIRLING
        return f"{self.kind}({self.param})"


def stirling() -> TriangleFamily:
    return TriangleFamily(STIRLING)


def r_stirling(r: int) -> TriangleFamily:
    return TriangleFamily(R_STIRLING, r)


def whitney(m: int) -> TriangleFamily:
    return TriangleFamily(WHITNEY, m)


@dataclass(frozen=True)
class Triangle:
    """Rows 0..n_max of one family; row n holds T(n,0)..T(n,n)."""

    family: TriangleFamily
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> tuple[int, ...]:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"row {n} out of range 0..{self.n_max}")
        return self.rows[n]


def build_triangle(family: TriangleFamily, n_max: int) -> Triangle:
    """All rows up to n_max, by the family recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            v = prev[k - 1] if k >= 1 else 0
            if k <= n - 1:
                v += family.weight(k) * prev[k]
            row.append(v)
        rows.append(tuple(row))
    return Triangle(family, tuple(rows))


def ordered_row(triangle: Triangle, n: int) -> tuple[int, ...]:
    """Entry k of row n scaled by (k+shift)!."""
    row = triangle.row(n)
    shift = triangle.family.ordered_shift
    out = []
    f = factorial(shift)
    for k, v in enumerate(row):
        out.append(f * v)
        f *= k + shift + 1
    return tuple(out)


def check_w1_equals_stirling_shift(n_max: int) -> tuple[bool, tuple[int, int] | None]:
    """Whitney m=1 against the shifted Stirling triangle.

    W_1(n,k) = S(n+1,k+1) must hold for all 0 <= k <= n <= n_max;
    returns (ok, first failing (n,k) or None).
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    w1 = build_triangle(whitney(1), n_max)
    s = build_triangle(stirling(), n_max + 1)
    for n in range(n_max + 1):
        for k in range(n + 1):
            if w1.rows[n][k] != s.rows[n + 1][k + 1]:
                return False, (n, k)
    return True, None


def check_r0_equals_stirling(n_max: int) -> tuple[bool, tuple[int, int] | None]:
    """r-Stirling with r=0 must reproduce the classical triangle exactly."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    s0 = build_triangle(r_stirling(0), n_max)
    s = build_triangle(stirling(), n_max)
    for n in range(n_max + 1):
        for k in range(n + 1):
            if s0.rows[n][k] != s.rows[n][k]:
                return False, (n, k)
    return True, None
