import pytest

from ppdet.combinat import (
    FIGURE1_FAMILY,
    CapInstability,
    GuardError,
    LatticePath,
    PathFamily,
    count_families_lgv,
    count_nonintersecting_pairs,
    ct_laurent_thm12,
    ct_laurent_thm13,
    ct_via_series,
    enumerate_families,
    enumerate_spp,
    iter_spp,
    lgv_count,
    paths_to_spp,
)
from ppdet.families import q_entry, rhs_thm11, rhs_thm12, rhs_thm13

# Figure 1.d: labels at cell (a, b) sit at row a+5, column 6-b
FIGURE1_SPP = [[5, 5, 5, 5, 4, 4], [4, 3, 3, 3, 3], [3, 3, 3, 2], [3, 1, 1], [1, 1], [0]]


def test_figure1_bijection():
    assert paths_to_spp(FIGURE1_FAMILY, 2, 5).tolist() == FIGURE1_SPP


@pytest.mark.parametrize("x,n", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 2), (0, 4)])
def test_enumeration_routes_agree(x, n):
    fams = enumerate_families(x, n)
    spps = {paths_to_spp(f, x, n).rows for f in fams}
    # injective and onto the SPP set
    assert len(spps) == len(fams)
    assert spps == {s.rows for s in iter_spp(x, n)}
    assert len(fams) == enumerate_spp(x, n) == count_families_lgv(x, n) == rhs_thm11(x, n)


def test_spp_examples():
    assert enumerate_spp(0, 3) == 7
    assert all(s.is_valid(1, 2) for s in iter_spp(1, 2))


def test_enumeration_guard():
    with pytest.raises(GuardError):
        enumerate_spp(0, 6)
    with pytest.raises(GuardError):
        enumerate_families(5, 2)


def test_path_family_validation():
    bad = PathFamily((LatticePath((0, 0), "E"), LatticePath((-2, 1), "EEE")))
    with pytest.raises(ValueError):
        bad.validate(1)
    with pytest.raises(ValueError):
        LatticePath((0, 0), "EX")


def test_lgv_single_path_counts():
    assert lgv_count([(0, 0)], [(2, 1)]) == 3
    # two non-crossing compatible paths
    assert lgv_count([(0, 0), (-1, 1)], [(1, 0), (0, 1)]) == 1


@pytest.mark.parametrize("x", range(3))
@pytest.mark.parametrize("i,j", [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])
def test_q_entry_counts_pairs(x, i, j):
    assert q_entry(x, i, j) == count_nonintersecting_pairs(x, i, j)


@pytest.mark.parametrize("x,n", [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 2), (2, 3)])
def test_ct_series(x, n):
    assert ct_via_series(x, n) == rhs_thm11(x, n)


def test_ct_series_cap_too_small():
    with pytest.raises(CapInstability):
        ct_via_series(0, 3, cap=1)


def test_ct_series_guard():
    with pytest.raises(GuardError):
        ct_via_series(3, 5)


@pytest.mark.parametrize("x,y,n", [(0, 0, 1), (1, 0, 2), (0, 2, 2), (1, 1, 3), (2, 1, 2), (0, 0, 3)])
def test_ct_laurent(x, y, n):
    assert ct_laurent_thm12(x, y, n) == rhs_thm12(x, y, n)
    assert ct_laurent_thm13(x, y, n) == rhs_thm13(x, y, n)


def test_ct_laurent_guard():
    with pytest.raises(GuardError):
        ct_laurent_thm13(4, 4, 2)
