"""Polynomial recurrences, derivative identities, and Sturm certification."""

from fractions import Fraction
from itertools import islice
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordmode.polynomials import (
    IntPolynomial,
    certify_real_rooted_in_interval,
    r_fubini_poly,
    r_fubini_polynomials,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
    sturm_count,
    whitney_fubini_poly,
    whitney_fubini_polynomials,
)
from ordmode.series import whitney_fubini_numbers
from ordmode.triangles import build_triangle, ordered_row, r_stirling, whitney

from oracles import fubini_count, ordered_stirling_count

F = Fraction


def poly(*coeffs):
    return IntPolynomial(tuple(coeffs))


class TestRecurrences:
    def test_r0_n3_matches_enumeration(self):
        # coefficients are the ordered partition counts with k blocks
        p = r_fubini_poly(0, 3)
        assert p.coeffs == tuple(ordered_stirling_count(3, k) for k in range(4))
        assert p.coeffs == (0, 1, 6, 6)

    def test_base_case_is_r_factorial(self):
        assert r_fubini_poly(1, 0).coeffs == (1,)
        assert r_fubini_poly(4, 0).coeffs == (24,)

    def test_r1_n2(self):
        assert r_fubini_poly(1, 1).coeffs == (1, 2)
        assert r_fubini_poly(1, 2).coeffs == (1, 6, 6)

    def test_whitney_small(self):
        assert whitney_fubini_poly(2, 0).coeffs == (1,)
        assert whitney_fubini_poly(2, 1).coeffs == (1, 1)
        assert whitney_fubini_poly(2, 2).coeffs == (1, 4, 2)
        assert whitney_fubini_poly(2, 3).coeffs == (1, 13, 18, 6)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            r_fubini_poly(-1, 3)
        with pytest.raises(ValueError):
            r_fubini_poly(0, -1)
        with pytest.raises(ValueError):
            whitney_fubini_poly(0, 3)

    @pytest.mark.parametrize("r", [0, 1, 3, 5])
    def test_coefficients_are_ordered_r_stirling_rows(self, r):
        t = build_triangle(r_stirling(r), 20)
        for n, p in enumerate(islice(r_fubini_polynomials(r), 21)):
            assert p.coeffs == ordered_row(t, n)

    @pytest.mark.parametrize("m", [1, 2, 5])
    def test_coefficients_are_ordered_whitney_rows(self, m):
        t = build_triangle(whitney(m), 20)
        for n, p in enumerate(islice(whitney_fubini_polynomials(m), 21)):
            assert p.coeffs == ordered_row(t, n)


class TestBasicOps:
    def test_derivative(self):
        assert poly(0, 1).derivative().coeffs == (1,)
        assert poly(7).derivative().is_zero
        assert poly(1, 13, 18, 6).derivative().coeffs == (13, 36, 18)

    def test_eval_at_one(self):
        assert r_fubini_poly(0, 4).eval_at_one() == fubini_count(4) == 75
        assert r_fubini_poly(3, 0).eval_at_one() == factorial(3)
        assert whitney_fubini_poly(2, 3).eval_at_one() == whitney_fubini_numbers(2, 3)[3] == 38

    def test_eval_rational(self):
        assert poly(0, 1)(0) == 0
        assert poly(1, 6, 6)(-1) == 1
        assert poly(1, 6, 6)(0) == 1
        assert poly(1, 6, 6)(F(-1, 2)) == -F(1, 2)

    def test_trailing_zeros_trimmed(self):
        assert poly(1, 2, 0, 0).coeffs == (1, 2)
        assert poly(0, 0).is_zero
        assert poly(0, 0).degree == -1


class TestDerivativeIdentities:
    def test_r_fubini_identity_fails_as_polynomials(self):
        # 2·F'_{1,0}(x) = 2 but F_{2,0}(x) - F_{1,0}(x) = 2x²: the relation
        # is an x=1 statement, not a polynomial identity
        lhs = r_fubini_poly(0, 1).derivative().scale(2)
        rhs = r_fubini_poly(0, 2) - r_fubini_poly(0, 1)
        assert lhs.coeffs == (2,)
        assert rhs.coeffs == (0, 0, 2)
        assert lhs.coeffs != rhs.coeffs
        assert lhs.eval_at_one() == rhs.eval_at_one()

    @pytest.mark.parametrize("r", range(6))
    def test_r_fubini_identity_at_one(self, r):
        gen = r_fubini_polynomials(r)
        prev = next(gen)
        for _ in range(60):
            cur = next(gen)
            assert 2 * prev.derivative().eval_at_one() == (
                cur.eval_at_one() - (2 * r + 1) * prev.eval_at_one()
            )
            prev = cur

    @pytest.mark.parametrize("m", range(1, 6))
    def test_whitney_identity_at_one(self, m):
        gen = whitney_fubini_polynomials(m)
        prev = next(gen)
        for _ in range(60):
            cur = next(gen)
            assert (m + 1) * prev.derivative().eval_at_one() == (
                cur.eval_at_one() - 2 * prev.eval_at_one()
            )
            prev = cur


class TestSturm:
    def test_two_roots_in_unit_interval(self):
        assert sturm_count(poly(1, 6, 6), -1, 0) == 2

    def test_no_real_roots(self):
        assert sturm_count(poly(1, 0, 1), -10, 10) == 0

    def test_root_at_closed_right_endpoint_counts(self):
        assert sturm_count(poly(0, 1), -1, 0) == 1

    def test_root_at_open_left_endpoint_excluded(self):
        assert sturm_count(poly(0, 1), 0, 1) == 0

    def test_rational_endpoints(self):
        # roots of (2x+1)(3x+1) are -1/2 and -1/3
        p = poly(1, 5, 6)
        assert sturm_count(p, -1, 0) == 2
        assert sturm_count(p, F(-1, 2), 0) == 1
        assert sturm_count(p, F(-2, 5), F(-1, 4)) == 1

    def test_counts_distinct_roots_only(self):
        p = poly(1, 2, 1) * poly(1, 2, 1)  # (x+1)^4
        assert sturm_count(p, -2, 0) == 1

    def test_chain_starts_with_squarefree_part_and_derivative(self):
        p = poly(1, 2, 1)  # (x+1)^2
        chain = sturm_chain(p)
        assert chain[0].coeffs == (1, 1)
        assert chain[1].coeffs == (1,)

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(poly(), -1, 0)

    def test_bad_interval_rejected(self):
        with pytest.raises(ValueError):
            sturm_count(poly(0, 1), 0, 0)


@given(
    roots=st.lists(
        st.fractions(min_value=-8, max_value=8, max_denominator=4),
        min_size=1,
        max_size=5,
    )
)
@settings(max_examples=120, deadline=None)
def test_sturm_count_matches_known_rational_roots(roots):
    p = poly(1)
    for root in roots:
        p = p * poly(-root.numerator, root.denominator)
    lo, hi = F(-17, 2), F(19, 2)
    expected = len({x for x in roots if lo < x <= hi})
    assert sturm_count(p, lo, hi) == expected


class TestSquarefree:
    def test_squarefree_part_strips_multiplicity(self):
        p = poly(1, 2, 1) * poly(0, 1)  # x(x+1)^2
        assert squarefree_part(p).coeffs == poly(0, 1, 1).coeffs

    def test_decomposition_multiplicities(self):
        p = poly(1, 1) * poly(1, 1) * poly(1, 2)  # (x+1)^2 (2x+1)
        parts = squarefree_decomposition(p)
        assert sorted((q.coeffs, i) for q, i in parts) == [
            ((1, 1), 2),
            ((1, 2), 1),
        ]
        assert sum(i * q.degree for q, i in parts) == p.degree


class TestCertification:
    def test_r0_family_strips_zero_root(self):
        cert = certify_real_rooted_in_interval(r_fubini_poly(0, 3))
        assert cert.ok
        assert cert.zero_root_multiplicity == 1
        assert cert.distinct_roots_in_interval == 2

    def test_whitney_roots_are_real_but_leave_the_unit_interval(self):
        # F_2(3,x) = (x+1)(6x²+12x+1): roots -1 and -1±sqrt(30)/6, so only
        # one of the three lies in (-1, 0]
        cert = certify_real_rooted_in_interval(whitney_fubini_poly(2, 3))
        assert cert.all_roots_real
        assert not cert.ok
        assert cert.zero_root_multiplicity == 0
        assert cert.distinct_roots_in_interval == 1
        assert cert.distinct_real_roots == 3

    def test_non_real_roots_rejected(self):
        cert = certify_real_rooted_in_interval(poly(1, 0, 1))
        assert not cert.ok
        assert not cert.all_roots_real

    def test_multiple_root_inside_interval(self):
        p = poly(0, 1) * poly(1, 2) * poly(1, 2)  # x(2x+1)^2
        cert = certify_real_rooted_in_interval(p)
        assert cert.ok
        assert cert.all_roots_real
        assert cert.zero_root_multiplicity == 1
        assert cert.distinct_roots_in_interval == 1
        assert cert.distinct_real_roots == 2
        assert cert.degree == 3

    def test_root_at_minus_one_is_outside(self):
        cert = certify_real_rooted_in_interval(poly(1, 1))
        assert cert.all_roots_real
        assert not cert.ok

    @pytest.mark.parametrize("r", [0, 1, 2, 3])
    def test_r_family_certifies_over_small_grid(self, r):
        for n, p in enumerate(islice(r_fubini_polynomials(r), 1, 21), start=1):
            cert = certify_real_rooted_in_interval(p)
            assert cert.ok, (r, n)
            assert cert.zero_root_multiplicity == (1 if r == 0 else 0)

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            certify_real_rooted_in_interval(poly())
