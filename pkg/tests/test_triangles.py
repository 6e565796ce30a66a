"""Triangle construction, ordered rows, and the structural identities."""

from math import factorial

import pytest

from ordmode.series import r_fubini_numbers, whitney_fubini_numbers
from ordmode.triangles import (
    TriangleFamily,
    build_triangle,
    check_r0_equals_stirling,
    check_w1_equals_stirling_shift,
    ordered_row,
    r_stirling,
    stirling,
    whitney,
)

from oracles import bell_count, r_stirling_count, stirling2_count


class TestFamilyValidation:
    def test_bad_parameters_rejected(self):
        with pytest.raises(ValueError):
            r_stirling(-1)
        with pytest.raises(ValueError):
            whitney(0)
        with pytest.raises(ValueError):
            TriangleFamily("bell")
        with pytest.raises(ValueError):
            TriangleFamily("stirling", 2)

    def test_labels(self):
        assert stirling().label == "stirling"
        assert r_stirling(2).label == "r-stirling(2)"
        assert whitney(3).label == "whitney(3)"


class TestBuildTriangle:
    def test_stirling_row4_matches_enumeration(self):
        t = build_triangle(stirling(), 4)
        assert t.rows[4] == tuple(stirling2_count(4, k) for k in range(5))
        assert t.rows[4] == (0, 1, 7, 6, 1)

    def test_r_stirling_row2_matches_enumeration(self):
        t = build_triangle(r_stirling(1), 2)
        assert t.rows[2] == tuple(r_stirling_count(2, k, 1) for k in range(3))
        assert t.rows[2] == (1, 3, 1)

    def test_whitney2_row3(self):
        # independent oracle: the ordered row sum must hit the EGF value
        t = build_triangle(whitney(2), 3)
        assert t.rows[3] == (1, 13, 9, 1)
        assert sum(ordered_row(t, 3)) == whitney_fubini_numbers(2, 3)[3]

    def test_row_shape_invariants(self):
        t = build_triangle(whitney(3), 12)
        assert t.rows[0] == (1,)
        for n in range(13):
            assert len(t.rows[n]) == n + 1
            assert all(v >= 0 for v in t.rows[n])
            assert t.rows[n][n] == 1

    def test_r_stirling_k0_column_is_r_power_n(self):
        t = build_triangle(r_stirling(3), 10)
        for n in range(11):
            assert t.rows[n][0] == 3 ** n

    def test_negative_n_max_rejected(self):
        with pytest.raises(ValueError):
            build_triangle(stirling(), -1)

    def test_bell_row_sums_match_enumeration(self):
        t = build_triangle(stirling(), 8)
        for n in range(9):
            assert sum(t.rows[n]) == bell_count(n)

    @pytest.mark.parametrize("r", [0, 1, 2])
    @pytest.mark.parametrize("n", range(6))
    def test_r_stirling_matches_enumeration(self, r, n):
        t = build_triangle(r_stirling(r), n)
        assert t.rows[n] == tuple(r_stirling_count(n, k, r) for k in range(n + 1))


class TestOrderedRow:
    def test_stirling_n4(self):
        t = build_triangle(stirling(), 4)
        assert ordered_row(t, 4) == (0, 1, 14, 36, 24)

    def test_r_stirling_shift_uses_k_plus_r_factorial(self):
        t = build_triangle(r_stirling(1), 2)
        assert ordered_row(t, 2) == (1, 6, 6)
        assert ordered_row(t, 2) == tuple(
            factorial(k + 1) * v for k, v in enumerate(t.rows[2])
        )

    def test_whitney_n3(self):
        t = build_triangle(whitney(2), 3)
        assert ordered_row(t, 3) == (1, 13, 18, 6)

    def test_out_of_range_row(self):
        t = build_triangle(stirling(), 3)
        with pytest.raises(IndexError):
            ordered_row(t, 4)

    def test_last_entry_positive(self):
        for fam in (stirling(), r_stirling(2), whitney(3)):
            t = build_triangle(fam, 9)
            for n in range(10):
                assert ordered_row(t, n)[n] > 0


class TestRowSumsAgainstEgf:
    @pytest.mark.parametrize("r", range(6))
    def test_r_stirling_ordered_sums(self, r):
        t = build_triangle(r_stirling(r), 15)
        oracle = r_fubini_numbers(r, 15)
        for n in range(16):
            assert sum(ordered_row(t, n)) == oracle[n]

    @pytest.mark.parametrize("m", range(1, 6))
    def test_whitney_ordered_sums(self, m):
        t = build_triangle(whitney(m), 15)
        oracle = whitney_fubini_numbers(m, 15)
        for n in range(16):
            assert sum(ordered_row(t, n)) == oracle[n]


class TestIdentities:
    @pytest.mark.parametrize("n_max", [0, 2, 60])
    def test_w1_equals_shifted_stirling(self, n_max):
        assert check_w1_equals_stirling_shift(n_max) == (True, None)

    def test_w1_spot_value(self):
        w1 = build_triangle(whitney(1), 2)
        s = build_triangle(stirling(), 3)
        assert w1.rows[2][1] == 3 == s.rows[3][2]

    @pytest.mark.parametrize("n_max", [0, 4, 60])
    def test_r0_reduces_to_stirling(self, n_max):
        assert check_r0_equals_stirling(n_max) == (True, None)
