from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ppdet.poly import (
    BoxOverflow,
    LaurentBox,
    NEG_INF,
    UniPoly,
    constant_term,
    constant_term_of_product,
    geometric_expand,
    lagrange_interpolate,
    laurent_mul,
    poly_pochhammer,
)

small = st.fractions(min_value=-19, max_value=19, max_denominator=6)
polys = st.lists(small, max_size=5).map(UniPoly)


def test_basic_arithmetic():
    x = UniPoly.x()
    p = (x + 1) * (x - 2)
    assert p.coeffs == (-2, -1, 1)
    assert p(3) == 4
    assert (p - p).is_zero()
    assert UniPoly().degree() is NEG_INF
    assert str(p) == "x^2 - x - 2"


def test_divmod_and_exact_div():
    x = UniPoly.x()
    p = (x + 1) * (x + 3) + 2
    q, r = p.divmod(x + 1)
    assert q * (x + 1) + r == p
    assert r.coeffs == (2,)
    with pytest.raises(ArithmeticError):
        p.exact_div(x + 1)
    with pytest.raises(ZeroDivisionError):
        p.divmod(UniPoly())


def test_poly_pochhammer_matches_scalar():
    p = poly_pochhammer(UniPoly.linear(2, 1), 3)
    for t in range(-3, 4):
        v = 2 * t + 1
        assert p(t) == v * (v + 1) * (v + 2)


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_ring_map(p, q, t):
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)


@given(st.lists(st.tuples(small, small), min_size=1, max_size=8, unique_by=lambda pt: pt[0]))
def test_lagrange_roundtrip(points):
    p = lagrange_interpolate(points)
    assert all(p(x) == y for x, y in points)
    assert p.is_zero() or p.degree() < len(points)


def test_lagrange_rejects_duplicates():
    with pytest.raises(ValueError):
        lagrange_interpolate([(1, 2), (1, 3)])


BOX = ((-3, -3), (3, 3))


def _laurent(terms):
    return LaurentBox(*BOX, terms)


exps = st.tuples(st.integers(-1, 1), st.integers(-1, 1))
laurents = st.dictionaries(exps, st.integers(-3, 3), max_size=4).map(_laurent)


@given(laurents, laurents)
def test_laurent_mul_commutative(a, b):
    assert laurent_mul(a, b).coeffs == laurent_mul(b, a).coeffs


@given(laurents, laurents, laurents)
def test_laurent_mul_associative(a, b, c):
    assert laurent_mul(laurent_mul(a, b), c).coeffs == laurent_mul(a, laurent_mul(b, c)).coeffs


def test_box_overflow_exact_vs_truncating():
    a = LaurentBox.monomial(*BOX, (2, 0))
    with pytest.raises(BoxOverflow):
        laurent_mul(a, a)
    assert len(laurent_mul(a, a, mode="truncating")) == 0
    with pytest.raises(BoxOverflow):
        LaurentBox((0,), (1,), {(2,): 1})
    # zero coefficients outside the box are harmless
    assert len(LaurentBox((0,), (1,), {(2,): 0})) == 0


def test_geometric_expand_and_constant_term():
    g = geometric_expand((1,), (-4,), (4,))
    assert sorted(g.coeffs) == [(k,) for k in range(5)]
    # CT of z^-2 * (1 + z + z^2 + ...) is 1
    a = LaurentBox.monomial((-4,), (4,), (-2,))
    assert constant_term(laurent_mul(a, g, mode="truncating")) == 1
    assert constant_term_of_product(a, g) == 1
    with pytest.raises(ValueError):
        geometric_expand((0,), (-1,), (1,))
