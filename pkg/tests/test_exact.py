from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ppdet.exact import (
    DirectedBounds,
    as_fraction,
    binomial,
    directed_sum,
    double_factorial,
    factorial,
    factorial_reciprocal,
    format_rational,
    parse_rational,
    pochhammer,
    pochhammer_ext,
)

rationals = st.fractions(min_value=-49, max_value=49, max_denominator=12)


@pytest.mark.parametrize("a,k,want", [(1, 0, 1), (1, 4, 24), (3, 2, 12), (-2, 3, 0), (Fraction(1, 2), 2, Fraction(3, 4))])
def test_pochhammer_values(a, k, want):
    assert pochhammer(a, k) == want


def test_pochhammer_negative_length_rejected():
    with pytest.raises(ValueError):
        pochhammer(2, -1)


@given(rationals, st.integers(0, 8))
def test_pochhammer_recurrence(a, k):
    assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


@pytest.mark.parametrize("a,k,want", [(5, -1, Fraction(1, 4)), (5, -2, Fraction(1, 12)), (3, 2, 12)])
def test_pochhammer_ext(a, k, want):
    assert pochhammer_ext(a, k) == want


def test_pochhammer_ext_pole():
    with pytest.raises(ZeroDivisionError):
        pochhammer_ext(1, -1)


@given(rationals, st.integers(-5, 5), st.integers(0, 5))
def test_pochhammer_ext_splits(a, k, j):
    # (a)_{k+j} = (a)_k (a+k)_j whenever both sides are finite
    try:
        lhs = pochhammer_ext(a, k + j)
        rhs = pochhammer_ext(a, k) * pochhammer_ext(a + k, j)
    except ZeroDivisionError:
        return
    assert lhs == rhs


@pytest.mark.parametrize("a,k,want", [(5, 2, 10), (5, 7, 0), (3, -1, 0), (-1, 3, -1), (-3, 2, 6), (0, 0, 1)])
def test_binomial(a, k, want):
    assert binomial(a, k) == want


@given(st.integers(-10, 10), st.integers(1, 10))
def test_binomial_pascal(a, k):
    assert binomial(a, k) == binomial(a - 1, k) + binomial(a - 1, k - 1)


def test_factorials():
    assert factorial(5) == 120
    assert factorial_reciprocal(-3) == 0
    assert factorial_reciprocal(3) == Fraction(1, 6)
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("k,want", [(-1, 1), (0, 1), (1, 1), (5, 15), (6, 48)])
def test_double_factorial(k, want):
    assert double_factorial(k) == want


def test_double_factorial_rejects():
    with pytest.raises(ValueError):
        double_factorial(-3)


def test_directed_sum_orientation():
    term = lambda r: r
    assert directed_sum(DirectedBounds(0, 3), term) == 6
    assert directed_sum(DirectedBounds(2, 2), term) == 0
    assert directed_sum(DirectedBounds(3, 0), term) == -6


@given(st.integers(-8, 8), st.integers(-8, 8))
def test_directed_sum_antisymmetric(a, b):
    f = lambda r: r * r + 1
    assert directed_sum(DirectedBounds(a, b), f) == -directed_sum(DirectedBounds(b, a), f)


@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-8, 8))
def test_directed_sum_additive(a, b, c):
    f = lambda r: 3 * r - 2
    total = directed_sum(DirectedBounds(a, b), f) + directed_sum(DirectedBounds(b, c), f)
    assert total == directed_sum(DirectedBounds(a, c), f)


def test_rational_io():
    assert format_rational(Fraction(3, 6)) == "1/2"
    assert format_rational(4) == "4"
    assert parse_rational("-7/14") == Fraction(-1, 2)
    assert as_fraction("5") == 5
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(TypeError):
        as_fraction(0.5)


@given(rationals)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q
