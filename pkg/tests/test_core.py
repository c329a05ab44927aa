from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from finsum.core import floor_div, gcd, is_coprime, neg_one_pow, sawtooth


class TestFloorDiv:
    def test_rounds_toward_minus_infinity(self):
        assert floor_div(7, 2) == 3
        assert floor_div(-7, 2) == -4
        assert floor_div(7, -2) == -4
        assert floor_div(-7, -2) == 3

    def test_exact_multiples(self):
        assert floor_div(6, 3) == 2
        assert floor_div(-6, 3) == -2
        assert floor_div(0, 5) == 0

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            floor_div(1, 0)

    @given(st.integers(-10**6, 10**6), st.integers(-10**3, 10**3).filter(bool))
    def test_matches_fraction_floor(self, p, q):
        assert floor_div(p, q) == Fraction(p, q).__floor__()


class TestSawtooth:
    def test_integers_map_to_zero(self):
        for x in (-3, 0, 1, Fraction(4, 2)):
            assert sawtooth(x) == 0

    def test_known_values(self):
        assert sawtooth(Fraction(1, 4)) == Fraction(-1, 4)
        assert sawtooth(Fraction(1, 2)) == 0
        assert sawtooth(Fraction(3, 4)) == Fraction(1, 4)
        assert sawtooth(Fraction(-1, 4)) == Fraction(1, 4)

    @given(st.fractions(max_denominator=1000))
    def test_odd(self, x):
        assert sawtooth(-x) == -sawtooth(x)

    @given(st.fractions(max_denominator=1000), st.integers(-5, 5))
    def test_periodic(self, x, n):
        assert sawtooth(x + n) == sawtooth(x)

    @given(st.fractions(max_denominator=1000))
    def test_range(self, x):
        v = sawtooth(x)
        assert Fraction(-1, 2) < v < Fraction(1, 2)


class TestGcd:
    def test_basic(self):
        assert gcd(12, 18) == 6
        assert gcd(-12, 18) == 6
        assert gcd(0, 0) == 0
        assert gcd(0, 7) == 7

    def test_coprime(self):
        assert is_coprime(3, 5)
        assert not is_coprime(6, 9)
        assert is_coprime(1, 1)
        assert not is_coprime(0, 5)


class TestNegOnePow:
    def test_values(self):
        assert neg_one_pow(0) == 1
        assert neg_one_pow(1) == -1
        assert neg_one_pow(2) == 1
        assert neg_one_pow(-1) == -1
        assert neg_one_pow(-2) == 1

    @given(st.integers(-10**9, 10**9))
    def test_matches_pow(self, n):
        assert neg_one_pow(n) == (-1) ** (n % 2)
