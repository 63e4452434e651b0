from fractions import Fraction

import pytest

from ppdet.families import d_matrix, rhs_cor3, rhs_thm2_prefactor
from ppdet.linalg import det
from ppdet.interp import (
    explore_458,
    explore_p3,
    p1_numeric,
    p1_via_step6,
    p4_consistency,
    p5_det_value,
    p5_extract,
    p6_value,
    step6_nodes,
    step6_prefactor,
    step6_zero_block_holds,
)
from ppdet.poly import UniPoly

GRID = [(m, n) for m in range(5) for n in range(max(m, 1), 7)]


def test_step6_examples():
    assert p1_via_step6(0, 2).polynomial.coeffs == (1,)
    assert p1_via_step6(0, 4).polynomial.coeffs == (4,)
    r = p1_via_step6(1, 3)
    assert r.degree == 0
    assert r.polynomial(0) == det(d_matrix(0, 1, 3)) / rhs_thm2_prefactor(0, 1, 3)


@pytest.mark.parametrize("m,n", GRID)
def test_step6_matches_numeric(m, n):
    a, b = p1_via_step6(m, n), p1_numeric(m, n)
    assert a.polynomial.coeffs == b.polynomial.coeffs
    assert a.route == "step6" and b.route == "integer_nodes"
    assert b.checks_passed == 2


@pytest.mark.parametrize("m,n", GRID)
def test_step6_degree_and_root(m, n):
    p = p1_via_step6(m, n).polynomial
    assert p.is_zero() or p.degree() <= m // 2
    assert (p(Fraction(-(m + n), 2)) == 0) == (n % 2 == 1 and m % 2 == 0)


@pytest.mark.parametrize("m,n", GRID)
def test_step6_zero_block(m, n):
    assert all(step6_zero_block_holds(m, n, t) for t in range(m // 2 + 1))


def test_step6_nodes_and_denominators():
    assert step6_nodes(2, 3) == [Fraction(-5, 2), Fraction(-3, 2)]
    for m, n in GRID:
        for t, x in enumerate(step6_nodes(m, n)):
            # the denominator never vanishes; the factor is zero only at the (2x+m+n) root
            root = t == 0 and n % 2 == 1 and m % 2 == 0
            assert (step6_prefactor(x, m, n) == 0) == root


def test_step6_guards():
    with pytest.raises(ValueError):
        p1_via_step6(3, 2)
    with pytest.raises(ValueError):
        p1_via_step6(7, 9)


def test_p1_numeric_against_cor3():
    p = p1_numeric(2, 2).polynomial
    assert p.degree() == 1
    for x in range(4):
        assert rhs_thm2_prefactor(x, 2, 2) * p(x) == rhs_cor3(x, 2, 2)


def test_p6_examples():
    assert p6_value(1, 2, 1) == 1
    assert p6_value(-1, 0, 2) == 0
    t = UniPoly.x()
    # n=2: 2 (x+1) times 0! 1!
    assert p6_value(t, t + 1, 2).coeffs == (2, 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_p4_consistency(n):
    rep = p4_consistency(n)
    assert rep.ok, rep.failures
    assert rep.passed == rep.checked > 0
    if n:
        assert rep.skipped == ["prefactor pole at (0,0)"]


@pytest.mark.parametrize("m,n", GRID)
def test_p5_extract(m, n):
    rep = p5_extract(m, n)
    assert rep.polynomial.is_zero() or rep.degree <= m // 2
    assert rep.checks_passed >= 3


def test_p5_examples():
    assert p5_extract(1, 2).polynomial.coeffs == (2,)
    zero = p5_extract(0, 3)
    assert zero.route == "closed_form" and zero.polynomial.is_zero()
    # (0, 2) at x=1: 2!/1! * 0! 1! * 1
    assert p5_extract(0, 2).polynomial(1) == 2 == p5_det_value(1, 0, 2)


def test_explore_examples():
    r = explore_p3(0, 4)
    assert r.rows[0].polynomial.coeffs == (1,)
    assert explore_p3(0, range(2, 7)).verdict == "consistent"
    assert explore_p3(5, range(2, 5)).verdict == "insufficient-data"
    assert explore_458(1, 2).rows[0].polynomial.coeffs == (1,)
    assert explore_458(2, 3).rows[0].polynomial.degree() == 1


@pytest.mark.parametrize("m", range(1, 5))
def test_explorers_on_wider_grids(m):
    assert explore_p3(m, range(m, 9)).verdict == "consistent"
    assert explore_458(m, range(m, 12)).verdict == "consistent"


def test_explorer_flags_inconsistency():
    # a fabricated wrong-degree row must not be reported as consistent
    from ppdet.interp import _explore

    rep = _explore("demo", 2, [2, 3], lambda n: (UniPoly.constant(1), ""))
    assert rep.verdict == "inconsistent"
