from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ppdet.linalg import (
    ExactMatrix,
    SkewMatrix,
    det,
    det_cofactor,
    det_poly,
    desnanot_jacobi_check,
    minor_sum,
    pfaffian,
)
from ppdet.poly import UniPoly

entries = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def square(max_n=5):
    return st.integers(1, max_n).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n))


def skew(max_n=6):
    def build(n):
        return st.lists(entries, min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
            lambda vals: SkewMatrix.build(n, lambda i, j, it=iter(vals), memo={}: memo.setdefault((i, j), next(it)))
        )

    return st.integers(0, max_n).flatmap(build)


def test_small_determinants():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert det([[Fraction(1, 2), 1], [1, 2]]) == 0
    with pytest.raises(ValueError):
        det([[1, 2, 3], [4, 5, 6]])


@given(square())
def test_bareiss_matches_cofactor(rows):
    assert det(rows) == det_cofactor(rows)


@given(square(4), st.integers(0, 3), entries)
def test_det_row_scaling(rows, r, c):
    r %= len(rows)
    scaled = [list(row) for row in rows]
    scaled[r] = [c * v for v in scaled[r]]
    assert det(scaled) == c * det(rows)


@given(square(4))
def test_det_equal_rows_vanish(rows):
    if len(rows) < 2:
        return
    rows = [list(r) for r in rows]
    rows[-1] = list(rows[0])
    assert det(rows) == 0


@given(square(4))
def test_det_transpose(rows):
    m = ExactMatrix(tuple(map(tuple, rows)))
    assert det(m) == det(m.transpose())


def test_det_poly():
    x = UniPoly.x()
    m = [[x, UniPoly.constant(1)], [UniPoly.constant(2), x + 1]]
    p = det_poly(m)
    assert p.coeffs == (-2, 1, 1)


def test_pfaffian_sign_and_small_cases():
    assert pfaffian(SkewMatrix(0)) == 1
    assert pfaffian(SkewMatrix(3, {(0, 1): 5})) == 0
    assert pfaffian(SkewMatrix(2, {(0, 1): 7})) == 7
    a, b, c, d, e, f = 2, 3, 5, 7, 11, 13
    m = SkewMatrix(4, {(0, 1): a, (0, 2): b, (0, 3): c, (1, 2): d, (1, 3): e, (2, 3): f})
    assert pfaffian(m) == a * f - b * e + c * d


@given(skew())
def test_pfaffian_squared_is_det(m):
    assert pfaffian(m) ** 2 == det(m.dense())


def test_skew_matrix_structure():
    m = SkewMatrix(3)
    m[2, 0] = 4
    assert m[0, 2] == -4
    with pytest.raises(ValueError):
        m[1, 1] = 1
    with pytest.raises(ValueError):
        SkewMatrix.from_dense([[0, 1], [1, 0]])


def test_minor_sum():
    m = [[1, 2, 3], [4, 5, 6]]
    assert minor_sum(m, 1) == 21
    assert minor_sum(m, 2) == (5 - 8) + (6 - 12) + (12 - 15)
    with pytest.raises(ValueError):
        minor_sum(m, 3)


@given(square(5))
def test_desnanot_jacobi_random(rows):
    if len(rows) < 2:
        return
    assert desnanot_jacobi_check(rows, trials=3, seed=1)
