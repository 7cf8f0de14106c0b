import pytest

from memory_dominoes.aggregate import (
    aggregate_oracle,
    calT,
    calT_series,
    placements,
    rho,
)
from memory_dominoes.algebra import IntPoly
from memory_dominoes.boards import SizeLimitError, family_poly, grid_graph, matching_polynomial


def test_figure_example():
    assert calT(3, 0, 1) == IntPoly([4, 12, 4])
    assert aggregate_oracle(3, 0, 1) == IntPoly([4, 12, 4])
    assert rho(3, 0, 1, 1) == 12
    assert rho(3, 0, 1, 0) == 4


def test_deleting_only_vertical_pair():
    assert calT_series(1).coeff((0, 0, 1, 0)) == 1
    assert aggregate_oracle(1, 1, 0) == IntPoly([1])


@pytest.mark.parametrize("k", range(6))
def test_no_deletions_is_grid(k):
    assert aggregate_oracle(k, 0, 0) == matching_polynomial(grid_graph(k))


def test_specialization_to_riordan():
    K = 6
    s = calT_series(K)
    for k in range(K + 1):
        assert s.poly("x", y=k) == family_poly("T", k)


@pytest.mark.parametrize("k", range(7))
def test_closed_form_matches_enumeration(k):
    for v in range(k + 1):
        for h in range(k + 1 - v):
            poly = calT(k, v, h)
            assert poly == aggregate_oracle(k, v, h), (k, v, h)
            assert poly.degree <= k - v - h


def test_rho_zero_counts_placements():
    for k in range(6):
        for v in range(k + 1):
            for h in range(k + 1 - v):
                assert rho(k, v, h, 0) == sum(1 for _ in placements(k, v, h))


def test_zero_beyond_antidiagonal():
    s = calT_series(5)
    for (x, y, w, z), c in s.items():
        assert x <= y, "degree bound"
    assert calT(3, 2, 2) == IntPoly()


def test_rho_range_flag():
    with pytest.raises(IndexError):
        rho(3, 0, 1, 3)
    assert rho(3, 0, 1, 3, allow_out_of_range=True) == 0


def test_oracle_size_limit():
    with pytest.raises(SizeLimitError):
        aggregate_oracle(9, 0, 0)


def test_coincident_horizontal_pairs_are_distinct_placements():
    # two horizontal dominoes stacked in columns 1-2 of the 2 x 2 grid
    ps = list(placements(2, 0, 2))
    assert len(ps) == 1
    assert calT(2, 0, 2) == IntPoly([1])
