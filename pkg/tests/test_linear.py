from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from memory_dominoes.algebra import MultiSeries, double_factorial
from memory_dominoes.boards import SizeLimitError
from memory_dominoes.counts import DominoTable, placement_oracle
from memory_dominoes.linear import (
    E_horizontal,
    E_horizontal_check,
    E_vertical,
    E_vertical_check,
    L_egf,
    L_from_egf,
    L_oracle,
    egf_row,
    fold,
    horizontal_counts_by_unfolding,
    ode_residual,
    recursion_check,
    unfold,
)


def test_L_oracle_examples():
    assert L_oracle(1) == [0, 1]
    assert L_oracle(2) == [1, 1, 1]
    assert sum(L_oracle(3)) == 15
    with pytest.raises(SizeLimitError):
        L_oracle(9)


def test_L_egf_examples():
    s = L_egf(3)
    assert s.coeff((0, 0)) == 1
    assert 2 * s.coeff((2, 1)) == 1
    assert egf_row(s, 3) == L_oracle(3)


@pytest.mark.parametrize("k", range(8))
def test_L_egf_matches_oracle(k):
    assert L_from_egf(7)[k] == L_oracle(k)


def test_L_row_sums():
    rows = L_from_egf(15)
    for k, row in rows.items():
        assert sum(row) == double_factorial(2 * k - 1)
        assert all(c >= 0 for c in row)


def test_egf_row_rejects_fractions():
    (y, z) = MultiSeries.gens("yz", (2, 2), ring=Fraction)
    with pytest.raises(ValueError):
        egf_row(y * Fraction(1, 3), 1)


def test_recursion_examples():
    t = DominoTable.from_series(2)
    L = {1: L_oracle(1), 2: L_oracle(2)}
    report = recursion_check(t, L)
    assert report.passed and report.checked == 5
    D = lambda k, h: t.by_horizontal(k)[h]
    assert D(2, 0) == 2 == D(1, 0) + L[2][0] - 0
    assert D(2, 1) == 0 == D(1, 1) + L[2][1] - D(1, 0)


def test_recursion_holds_with_both_L_sources():
    t = DominoTable.from_series(7)
    assert recursion_check(t, {k: L_oracle(k) for k in range(1, 8)}).passed
    assert recursion_check(t, L_from_egf(7)).passed


def test_recursion_detects_wrong_L():
    t = DominoTable.from_series(3)
    L = {k: L_oracle(k) for k in range(1, 4)}
    L[3] = [L[3][0] + 1] + L[3][1:]
    report = recursion_check(t, L)
    assert not report.passed
    assert report.as_dict()["failures"][0][0] == "(3, 0)"


def test_recursion_needs_table():
    with pytest.raises(ValueError):
        recursion_check(DominoTable.from_series(2), {3: L_oracle(3)})


@given(st.integers(1, 12).flatmap(lambda k: st.tuples(st.just(k), st.integers(1, 2 * k))))
def test_fold_unfold_round_trip(kp):
    k, pos = kp
    assert unfold(k, fold(k, pos)) == pos


def test_fold_errors():
    with pytest.raises(ValueError):
        unfold(3, (3, 1))
    with pytest.raises(ValueError):
        fold(3, 7)


def test_central_pair_is_vertical():
    k = 4
    assert fold(k, k)[1] == fold(k, k + 1)[1] == k


@pytest.mark.parametrize("k", range(1, 6))
def test_unfolding_reproduces_horizontal_counts(k):
    want = [0] * (k + 1)
    for (v, h), n in placement_oracle(k).items():
        want[h] += n
    assert horizontal_counts_by_unfolding(k) == want


def test_E_horizontal_examples():
    E = E_horizontal(3)
    assert E.coeff((0, 0)) == 1
    assert egf_row(E, 3) == [7, 4, 4, 0]
    assert 2 * E.coeff((2, 0)) == 2


def test_E_vertical_examples():
    E = E_vertical(3)
    assert egf_row(E, 0)[:1] == [1]
    assert egf_row(E, 2)[:3] == [2, 0, 1]
    assert egf_row(E, 3) == [8, 6, 0, 1]


def test_egf_checks(table50):
    assert E_vertical_check(table50, 20).passed
    assert E_horizontal_check(table50, 20).passed


def test_ode_residual_is_zero():
    L = L_egf(20)
    assert ode_residual(E_horizontal(20, L), L).terms == {}


def test_ode_residual_detects_perturbation():
    L = L_egf(6)
    E = E_horizontal(6, L)
    (y, z) = MultiSeries.gens("yz", E.caps, ring=Fraction)
    assert ode_residual(E + y**3 * z, L).terms != {}
