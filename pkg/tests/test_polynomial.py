from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pibeta.errors import DomainError
from pibeta.exact import I, MINUS_I, GaussianRational
from pibeta.polynomial import (
    X2_PLUS_1,
    Polynomial,
    dalzell_polynomial,
    divide_by_x2_plus_1,
    integrate_unit_interval,
)

small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)
poly_coeffs = st.lists(small_rationals, min_size=0, max_size=31)

# Published expansions of the quotients P(q; x) / (x^2 + 1); independently
# re-derived here via the reconstruction identity in test_quotient_fixtures.
QUOTIENT_1 = (4, 0, -4, 0, 5, -4, 1)
QUOTIENT_2 = (
    4, 0, -4, 0, 4, 0, -4, 0,
    Fraction(15, 4), 2, Fraction(-43, 4), 12, Fraction(-27, 4), 2, Fraction(-1, 4),
)
QUOTIENT_3 = (
    4, 0, -4, 0, 4, 0, -4, 0, 4, 0, -4, 0,
    Fraction(65, 16), Fraction(-3, 4), Fraction(1, 16), -13, Fraction(247, 8),
    Fraction(-73, 2), Fraction(215, 8), -13, Fraction(65, 16), Fraction(-3, 4),
    Fraction(1, 16),
)


class TestPolynomialType:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial((1, 2, 0, 0)).coefficients == (1, 2)

    def test_zero_polynomial(self):
        zero = Polynomial((0, 0))
        assert zero.is_zero
        assert zero.degree is None
        assert zero == Polynomial(())

    def test_degree(self):
        assert Polynomial((1, 0, 3)).degree == 2

    def test_add(self):
        assert Polynomial((1, 2)) + Polynomial((0, -2, 5)) == Polynomial((1, 0, 5))

    def test_mul(self):
        # (1 + x)(1 - x) = 1 - x^2
        assert Polynomial((1, 1)) * Polynomial((1, -1)) == Polynomial((1, 0, -1))

    def test_scalar_mul(self):
        assert 2 * Polynomial((1, 3)) == Polynomial((2, 6))

    def test_mul_by_zero(self):
        assert (Polynomial((1, 2)) * Polynomial(())).is_zero


class TestDalzellPolynomial:
    def test_q1_coefficients(self):
        # 4 + x^4 (1-x)^4 = 4 + x^4 - 4x^5 + 6x^6 - 4x^7 + x^8
        assert dalzell_polynomial(1).coefficients == (4, 0, 0, 0, 1, -4, 6, -4, 1)

    def test_constant_term_is_4(self):
        for q in range(1, 8):
            assert dalzell_polynomial(q).coefficients[0] == 4

    def test_degree_law(self):
        for q in range(1, 21):
            assert dalzell_polynomial(q).degree == 8 * q

    def test_invalid_q(self):
        with pytest.raises(DomainError):
            dalzell_polynomial(0)
        with pytest.raises(DomainError):
            dalzell_polynomial(-3)


class TestGaussEvaluation:
    def test_vanishes_at_i(self):
        for q in range(1, 21):
            assert dalzell_polynomial(q).evaluate(I).is_zero

    def test_vanishes_at_minus_i(self):
        for q in range(1, 21):
            assert dalzell_polynomial(q).evaluate(MINUS_I).is_zero

    def test_constant_at_any_point(self):
        four = Polynomial((4,))
        value = four.evaluate(GaussianRational(Fraction(3, 5), Fraction(-7, 2)))
        assert value == GaussianRational.from_real(4)

    def test_real_input_real_output(self):
        p = Polynomial((1, 2, 3))
        value = p.evaluate(GaussianRational.from_real(Fraction(1, 2)))
        assert value.im == 0
        assert value.re == p.evaluate(Fraction(1, 2))

    def test_rational_evaluation(self):
        assert Polynomial((1, 1)).evaluate(Fraction(1, 2)) == Fraction(3, 2)


class TestDivision:
    def test_quotient_fixtures(self):
        for q, expected in ((1, QUOTIENT_1), (2, QUOTIENT_2), (3, QUOTIENT_3)):
            p = dalzell_polynomial(q)
            quotient, remainder = divide_by_x2_plus_1(p)
            assert remainder.is_zero
            assert quotient == Polynomial(expected)
            # independent witness: multiply back
            assert X2_PLUS_1 * quotient == p

    def test_divisor_by_itself(self):
        quotient, remainder = divide_by_x2_plus_1(X2_PLUS_1)
        assert quotient == Polynomial((1,))
        assert remainder.is_zero

    def test_x_cubed(self):
        # x^3 = (x^2 + 1) * x - x
        quotient, remainder = divide_by_x2_plus_1(Polynomial((0, 0, 0, 1)))
        assert quotient == Polynomial((0, 1))
        assert remainder == Polynomial((0, -1))

    def test_zero_remainder_for_all_q(self):
        for q in range(1, 21):
            assert divide_by_x2_plus_1(dalzell_polynomial(q)).remainder.is_zero

    def test_remainder_degree_bound(self):
        result = divide_by_x2_plus_1(Polynomial((1, 2, 3, 4, 5)))
        assert result.remainder.degree is None or result.remainder.degree <= 1

    @settings(max_examples=200)
    @given(poly_coeffs)
    def test_reconstruction_identity(self, coeffs):
        p = Polynomial(coeffs)
        result = divide_by_x2_plus_1(p)
        assert result.reconstructs(p)
        assert X2_PLUS_1 * result.quotient + result.remainder == p


class TestIntegration:
    def test_quotient_of_q1_gives_22_sevenths(self):
        quotient, _ = divide_by_x2_plus_1(dalzell_polynomial(1))
        assert integrate_unit_interval(quotient) == Fraction(22, 7)

    def test_constant_one(self):
        assert integrate_unit_interval(Polynomial((1,))) == 1

    def test_power_rule(self):
        for n in range(12):
            monomial = Polynomial([0] * n + [1])
            assert integrate_unit_interval(monomial) == Fraction(1, n + 1)

    def test_zero_polynomial(self):
        assert integrate_unit_interval(Polynomial(())) == 0

    @given(poly_coeffs, poly_coeffs, small_rationals, small_rationals)
    def test_linearity(self, c1, c2, a, b):
        p, r = Polynomial(c1), Polynomial(c2)
        combined = a * p + b * r
        assert integrate_unit_interval(combined) == a * integrate_unit_interval(
            p
        ) + b * integrate_unit_interval(r)
