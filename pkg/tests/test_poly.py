from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fmtri.poly import (
    BivarPoly,
    alternative_substitution,
    conjecture_substitution,
    uni_add,
    uni_eval,
    uni_mul,
)

# small exact polynomials for property tests
coeffs = st.integers(-9, 9)
polys = st.builds(
    BivarPoly,
    st.lists(st.lists(coeffs, min_size=1, max_size=4), min_size=1, max_size=4),
)


def poly_from_terms(*terms):
    out = BivarPoly.zero()
    for k, l, c in terms:
        out = out + BivarPoly.monomial(k, l, c)
    return out


F_A1 = poly_from_terms((0, 0, 1), (1, 0, 1), (0, 1, 1))
F_A2 = poly_from_terms((0, 0, 1), (1, 0, 3), (2, 0, 2), (0, 1, 2), (1, 1, 2), (0, 2, 1))


class TestRingOps:
    def test_product_expansion(self):
        one_plus_x = poly_from_terms((0, 0, 1), (1, 0, 1))
        one_plus_y = poly_from_terms((0, 0, 1), (0, 1, 1))
        assert one_plus_x * one_plus_y == poly_from_terms(
            (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)
        )

    def test_add_zero(self):
        assert F_A2 + BivarPoly.zero() == F_A2

    def test_square(self):
        p = poly_from_terms((0, 0, 1), (1, 0, 1), (0, 1, 1))
        assert p * p == poly_from_terms(
            (0, 0, 1), (1, 0, 2), (0, 1, 2), (2, 0, 1), (1, 1, 2), (0, 2, 1)
        )

    def test_canonical_trim(self):
        assert BivarPoly([[1, 0], [0, 0]]) == BivarPoly.constant(1)
        assert BivarPoly([[0]]).is_zero

    @given(polys, polys, polys)
    def test_ring_laws(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert p * (q + r) == p * q + p * r

    @given(polys)
    def test_scalar_mul(self, p):
        assert 2 * p == p + p
        assert -1 * p == -p


class TestCalculus:
    def test_antiderivative_example(self):
        # one step of the rank-2 recursion: integrating 2 * (1 + x + y)
        p = poly_from_terms((0, 0, 2), (1, 0, 2), (0, 1, 2))
        assert p.antiderivative_y() == poly_from_terms((0, 1, 2), (1, 1, 2), (0, 2, 1))

    def test_antiderivative_zero(self):
        assert BivarPoly.zero().antiderivative_y().is_zero

    def test_antiderivative_power(self):
        assert BivarPoly.monomial(0, 2, 3).antiderivative_y() == BivarPoly.monomial(0, 3, 1)

    @given(polys)
    def test_derivative_inverts_antiderivative(self, p):
        assert p.antiderivative_y().derivative_y() == p

    def test_fraction_coefficients_survive(self):
        p = BivarPoly.monomial(0, 1, 1).antiderivative_y()
        assert p.coeff(0, 2) == Fraction(1, 2)
        assert not p.is_integral()


class TestSubstitutions:
    def test_diagonal_of_rank2_triangle(self):
        assert F_A2.diagonal() == (1, 5, 5)

    def test_diagonal_monomial(self):
        assert BivarPoly.monomial(1, 1, 1).diagonal() == (0, 0, 1)

    def test_diagonal_constant(self):
        assert BivarPoly.constant(7).diagonal() == (7,)

    def test_subs(self):
        assert F_A2.subs_y(0) == (1, 3, 2)
        assert F_A2.subs_y(-1) == (0, 1, 2)
        assert F_A2.subs_x(0) == (1, 2, 1)
        assert F_A2.evaluate(Fraction(1, 2), 1) == 7


class TestReflect:
    def test_rank1_fixed_point(self):
        assert F_A1.reflect(1) == F_A1

    def test_rank0(self):
        assert BivarPoly.constant(1).reflect(0) == BivarPoly.constant(1)

    def test_rank2_fixed_point(self):
        assert F_A2.reflect(2) == F_A2

    def test_degree_guard(self):
        with pytest.raises(ValueError):
            F_A2.reflect(1)

    @given(polys, st.integers(0, 8))
    def test_involution(self, p, n):
        if p.total_degree() <= n:
            assert p.reflect(n).reflect(n) == p


class TestConjectureSubstitution:
    def test_rank1(self):
        # (1-y) + (x+y) + y
        assert conjecture_substitution(F_A1, 1) == poly_from_terms(
            (0, 0, 1), (1, 0, 1), (0, 1, 1)
        )

    def test_rank0(self):
        assert conjecture_substitution(BivarPoly.constant(1), 0) == BivarPoly.constant(1)

    def test_rank2(self):
        expected = poly_from_terms(
            (0, 0, 1), (1, 0, 3), (2, 0, 2), (0, 1, 3), (1, 1, 3), (0, 2, 1)
        )
        assert conjecture_substitution(F_A2, 2) == expected

    def test_support_guard(self):
        with pytest.raises(ValueError):
            conjecture_substitution(F_A2, 1)

    @given(polys, st.integers(0, 8))
    def test_matches_rational_evaluation(self, p, n):
        """Independent oracle: evaluate the rational expression pointwise."""
        if p.total_degree() > n:
            return
        q = conjecture_substitution(p, n)
        points = [(2, 2), (-2, 3), (Fraction(1, 3), Fraction(1, 2)), (5, -4)]
        for xv, yv in ((Fraction(a), Fraction(b)) for a, b in points):
            lhs = (1 - yv) ** n * p.evaluate((xv + yv) / (1 - yv), yv / (1 - yv))
            assert q.evaluate(xv, yv) == lhs

    @given(polys, st.integers(0, 8))
    def test_y0_slice_is_positive_part(self, p, n):
        if p.total_degree() > n:
            return
        assert conjecture_substitution(p, n).subs_y(0) == p.subs_y(0)


class TestAlternativeSubstitution:
    @given(polys, st.integers(0, 8))
    def test_matches_rational_evaluation(self, p, n):
        if p.total_degree() > n:
            return
        q = alternative_substitution(p, n)
        points = [(1, 3), (-2, 4), (Fraction(2, 3), Fraction(1, 2)), (5, -4)]
        for xv, yv in ((Fraction(a), Fraction(b)) for a, b in points):
            lhs = (yv - 1) ** n * p.evaluate((xv + 1) / (yv - 1), 1 / (yv - 1))
            assert q.evaluate(xv, yv) == lhs


class TestUnivariateHelpers:
    def test_add_mul_eval(self):
        p, q = (1, 2), (0, 1, 1)
        assert uni_add(p, q) == (1, 3, 1)
        assert uni_mul(p, q) == (0, 1, 3, 2)
        assert uni_eval(uni_mul(p, q), 2) == uni_eval(p, 2) * uni_eval(q, 2)

    def test_zero_conventions(self):
        assert uni_mul((), (1, 2)) == ()
        assert uni_add((), (1,)) == (1,)
