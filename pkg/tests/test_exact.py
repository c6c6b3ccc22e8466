from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pibeta.exact import (
    I,
    MINUS_I,
    GaussianRational,
    factorial,
    make_rational,
    rat_cmp,
    rat_pow,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=1000)


class TestMakeRational:
    def test_gcd_reduction(self):
        assert make_rational(4, 8) == Fraction(1, 2)

    def test_sign_normalization(self):
        r = make_rational(-3, -6)
        assert r == Fraction(1, 2)
        assert r.denominator > 0

    def test_already_reduced(self):
        r = make_rational(47171, 15015)
        assert (r.numerator, r.denominator) == (47171, 15015)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            make_rational(1, 0)

    def test_sign_on_numerator(self):
        r = make_rational(3, -7)
        assert (r.numerator, r.denominator) == (-3, 7)

    def test_normalization_idempotent(self):
        r = make_rational(-10, 4)
        assert make_rational(r.numerator, r.denominator) == r


class TestFieldArithmetic:
    def test_sub_example(self):
        assert Fraction(22, 7) - Fraction(1, 630) == Fraction(1979, 630)

    def test_add_halves(self):
        assert Fraction(1, 2) + Fraction(1, 2) == 1

    def test_cmp_22_sevenths_larger(self):
        assert rat_cmp(Fraction(22, 7), Fraction(47171, 15015)) == 1

    def test_cmp_all_orderings(self):
        assert rat_cmp(Fraction(1, 3), Fraction(1, 2)) == -1
        assert rat_cmp(Fraction(2, 4), Fraction(1, 2)) == 0

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1, 2) / Fraction(0)

    @settings(max_examples=200)
    @given(rationals, rationals, rationals)
    def test_field_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestRatPow:
    def test_quarter_powers(self):
        assert rat_pow(Fraction(-1, 4), 1) == Fraction(-1, 4)
        assert rat_pow(Fraction(-1, 4), 2) == Fraction(1, 16)

    def test_zeroth_power(self):
        assert rat_pow(Fraction(5, 3), 0) == 1
        assert rat_pow(Fraction(0), 0) == 1

    def test_negative_exponent(self):
        assert rat_pow(Fraction(2, 3), -2) == Fraction(9, 4)

    def test_zero_to_negative(self):
        with pytest.raises(ZeroDivisionError):
            rat_pow(Fraction(0), -1)

    @given(
        rationals.filter(lambda r: r != 0),
        st.integers(min_value=-16, max_value=16),
        st.integers(min_value=-16, max_value=16),
    )
    def test_exponent_additivity(self, a, m, n):
        assert rat_pow(a, m + n) == rat_pow(a, m) * rat_pow(a, n)


class TestFactorial:
    def test_zero(self):
        assert factorial(0) == 1

    def test_eight(self):
        assert factorial(8) == 40320

    def test_seventeen(self):
        # consistency with 1/B(9,9) = 17!/(8! * 8!) = 218790
        assert factorial(17) == 355687428096000
        assert factorial(17) // (factorial(8) ** 2) == 218790

    def test_recurrence(self):
        for n in range(1, 201):
            assert factorial(n) == n * factorial(n - 1)

    def test_negative(self):
        with pytest.raises(ValueError):
            factorial(-1)


class TestGaussianRational:
    def test_i_squared(self):
        assert I * I == GaussianRational.from_real(-1)

    def test_one_minus_i_fourth(self):
        z = GaussianRational(1, -1)
        assert z * z * z * z == GaussianRational.from_real(-4)

    def test_real_embedding_add(self):
        a = GaussianRational.from_real(Fraction(2, 3))
        b = GaussianRational.from_real(Fraction(1, 3))
        total = a + b
        assert total.re == 1 and total.im == 0

    def test_sub(self):
        assert I - I == GaussianRational(0, 0)
        assert (I - MINUS_I).im == 2

    def test_is_zero(self):
        assert GaussianRational(0, 0).is_zero
        assert not I.is_zero

    def test_coercion_to_fraction(self):
        z = GaussianRational(1, 2)
        assert isinstance(z.re, Fraction) and isinstance(z.im, Fraction)

    @settings(max_examples=200)
    @given(rationals, rationals, rationals, rationals)
    def test_mul_componentwise(self, ar, ai, br, bi):
        prod = GaussianRational(ar, ai) * GaussianRational(br, bi)
        assert prod.re == ar * br - ai * bi
        assert prod.im == ar * bi + ai * br
