from fractions import Fraction
from math import factorial
import random

import pytest
from hypothesis import given, strategies as st

from sp4gt.exact import HalfInt, MultiIndex, QSqrt2, format_fraction, parse_fraction, reciprocal_factorial


@pytest.mark.parametrize("n,expected", [(0, Fraction(1)), (4, Fraction(1, 24)), (-1, Fraction(0))])
def test_reciprocal_factorial_examples(n, expected):
    assert reciprocal_factorial(n) == expected


def test_reciprocal_factorial_inverts_factorial():
    for n in range(51):
        assert reciprocal_factorial(n) * factorial(n) == 1


@given(st.integers(min_value=-60, max_value=60))
def test_reciprocal_factorial_zero_iff_negative(n):
    assert (reciprocal_factorial(n) == 0) == (n < 0)


def test_rational_sums_are_exact():
    rng = random.Random(11)
    for _ in range(1000):
        a, c = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        b, d = rng.randint(1, 10**6), rng.randint(1, 10**6)
        assert (Fraction(a, b) + Fraction(c, d)) * b * d == a * d + c * b


def test_fraction_text_roundtrip():
    for x in (Fraction(0), Fraction(-3), Fraction(7, 12), Fraction(-1, 2)):
        assert parse_fraction(format_fraction(x)) == x
    assert format_fraction(Fraction(4, 2)) == "2"


class TestHalfInt:
    def test_parse_and_store_doubled(self):
        assert HalfInt("3/2").twice == 3
        assert HalfInt(2).twice == 4
        assert HalfInt(twice=-1).to_fraction() == Fraction(-1, 2)

    def test_rejects_quarters(self):
        with pytest.raises(ValueError):
            HalfInt("1/4")

    def test_immutable(self):
        h = HalfInt(1)
        with pytest.raises(AttributeError):
            h.twice = 4

    @given(st.integers(-40, 40), st.integers(-40, 40))
    def test_arithmetic_matches_fractions(self, a, b):
        x, y = HalfInt(twice=a), HalfInt(twice=b)
        assert (x + y).to_fraction() == Fraction(a + b, 2)
        assert (x - y).to_fraction() == Fraction(a - b, 2)
        assert (x < y) == (a < b)

    def test_integer_flag(self):
        assert HalfInt(3).is_integer
        assert not HalfInt("1/2").is_integer


class TestMultiIndex:
    def test_componentwise(self):
        u, v = MultiIndex((1, 2, -3)), MultiIndex((0, -2, 3))
        assert u + v == (1, 0, 0)
        assert u - v == (1, 4, -6)
        assert 2 * u == (2, 4, -6)
        assert -u == (-1, -2, 3)

    def test_rejects_non_integers(self):
        with pytest.raises(ValueError):
            MultiIndex((Fraction(1, 2),))
        with pytest.raises(TypeError):
            MultiIndex((0.5,))

    def test_accepts_integral_halfints(self):
        assert MultiIndex((HalfInt(2), Fraction(4, 2))) == (2, 2)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            MultiIndex((1, 2)) + MultiIndex((1,))


class TestQSqrt2:
    def test_sqrt2_squares_to_two(self):
        r = QSqrt2(0, 1)
        assert r * r == 2

    @given(*(st.fractions(min_value=-50, max_value=50, max_denominator=20) for _ in range(4)))
    def test_field_axioms(self, a, b, c, d):
        x, y = QSqrt2(a, b), QSqrt2(c, d)
        assert (x + y) - y == x
        assert x * y == y * x
        if y:
            assert (x / y) * y == x

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            QSqrt2(1) / QSqrt2(0)
