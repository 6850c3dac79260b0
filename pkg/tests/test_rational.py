"""ExactRational semantics, cross-checked against fractions.Fraction."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fasthough.rational import ExactRational

nums = st.integers(min_value=-10**6, max_value=10**6)
dens = st.integers(min_value=1, max_value=10**6)


def test_fixed_denominator_is_kept():
    r = ExactRational(10, 15)
    assert (r.num, r.den) == (10, 15)
    assert r == ExactRational(2, 3)
    assert r.as_fraction() == Fraction(2, 3)


def test_positive_denominator_required():
    with pytest.raises(ValueError):
        ExactRational(1, 0)
    with pytest.raises(ValueError):
        ExactRational(1, -3)


def test_comparisons_against_ints_and_fractions():
    assert ExactRational(7, 7) == 1
    assert ExactRational(-3, 6) == Fraction(-1, 2)
    assert ExactRational(1, 3) < ExactRational(1, 2)
    assert ExactRational(1, 3) <= Fraction(1, 3)
    assert ExactRational(5, 3) > 1
    assert ExactRational(5, 3) >= ExactRational(10, 6)


def test_approx_rendering_12_digits():
    assert ExactRational(10, 15).approx() == "0.666666666667"
    assert ExactRational(1, 3).approx() == "0.333333333333"
    assert ExactRational(3, 7).approx() == "0.428571428571"


def test_repr_shows_raw_pair():
    assert repr(ExactRational(-10, 15)) == "-10/15"


@given(nums, dens, nums, dens)
def test_arithmetic_matches_fraction(a, b, c, d):
    x, y = ExactRational(a, b), ExactRational(c, d)
    fx, fy = Fraction(a, b), Fraction(c, d)
    assert (x + y).as_fraction() == fx + fy
    assert (x - y).as_fraction() == fx - fy
    assert (x * y).as_fraction() == fx * fy
    assert (-x).as_fraction() == -fx
    assert abs(x).as_fraction() == abs(fx)
    assert (x == y) == (fx == fy)
    assert (x < y) == (fx < fy)
    assert (x <= y) == (fx <= fy)


@given(nums, dens)
def test_hash_consistent_with_equality(a, b):
    assert hash(ExactRational(a, b)) == hash(ExactRational(2 * a, 2 * b))
    assert hash(ExactRational(a, b)) == hash(Fraction(a, b))


@given(nums, dens, st.integers(min_value=-100, max_value=100))
def test_int_mixing(a, b, k):
    x = ExactRational(a, b)
    assert (x + k).as_fraction() == Fraction(a, b) + k
    assert (k + x).as_fraction() == k + Fraction(a, b)
    assert (x - k).as_fraction() == Fraction(a, b) - k
    assert (k - x).as_fraction() == k - Fraction(a, b)
    assert (k * x).as_fraction() == k * Fraction(a, b)
