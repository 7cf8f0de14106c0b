import csv
import io
import json

import pytest

from conftest import PAPER_MATRICES
from memory_dominoes.algebra import MultiSeries, double_factorial, fibonacci
from memory_dominoes.boards import SizeLimitError
from memory_dominoes.counts import (
    DominoTable,
    D_series,
    D_series_literal,
    F_closed_form,
    F_ell,
    classify,
    combined_closed_form,
    count_via_inclusion_exclusion,
    horizontal_only_closed_form,
    pairings,
    placement_oracle,
    specialize,
    structural_violations,
    transfer_counts,
    vertical_only_closed_form,
)


def test_inclusion_exclusion_examples():
    assert count_via_inclusion_exclusion(3, 0, 1) == 4
    assert count_via_inclusion_exclusion(2, 0, 2) == 1
    assert count_via_inclusion_exclusion(1, 1, 0) == 1


def test_oracle_examples():
    assert placement_oracle(1) == {(1, 0): 1}
    assert placement_oracle(2) == {(0, 0): 1, (0, 2): 1, (2, 0): 1}
    k3 = placement_oracle(3)
    assert k3[1, 0] == 4 and k3[0, 1] == 4 and k3[3, 0] == 1
    assert sum(k3.values()) == 15


def test_oracle_size_limit():
    with pytest.raises(SizeLimitError):
        placement_oracle(9)


def test_pairings_count_and_uniqueness():
    for n in range(5):
        ps = [frozenset(map(frozenset, p)) for p in pairings(list(range(2 * n)))]
        assert len(ps) == double_factorial(2 * n - 1) == len(set(ps))


def test_classify():
    assert classify(((1, 2), (2, 2))) == "v"
    assert classify(((2, 3), (2, 4))) == "h"
    assert classify(((1, 1), (2, 2))) == ""
    assert classify(((1, 1), (1, 3))) == ""


def test_series_examples():
    s = D_series(3)
    assert s.coeff((0, 0, 0)) == 1
    assert s.coeff((3, 1, 0)) == 4
    assert [[s.coeff((3, v, h)) for h in range(4)] for v in range(4)] == PAPER_MATRICES[3]


@pytest.mark.parametrize("k", range(4))
def test_paper_matrices(k):
    assert DominoTable.from_series(3).matrix(k) == PAPER_MATRICES[k]


@pytest.mark.parametrize("k", range(8))
def test_three_routes_agree(k):
    oracle = placement_oracle(k)
    series = D_series(k)
    for v in range(k + 1):
        for h in range(k + 1 - v):
            ie = count_via_inclusion_exclusion(k, v, h)
            assert ie == series.coeff((k, v, h)) == oracle.get((v, h), 0), (k, v, h)


def test_transfer_route_agrees_with_series():
    K = 14
    t = transfer_counts(K)
    s = D_series(K)
    for k in range(K + 1):
        for v in range(k + 1):
            for h in range(k + 1 - v):
                assert t.get((k, v, h), 0) == s.coeff((k, v, h))


def test_fast_series_matches_literal_expansion():
    assert D_series(9) == D_series_literal(9)


def test_structural_laws(table50):
    assert structural_violations(D_series(50)) == []
    for k in (0, 1, 7, 50):
        assert table50.total(k) == double_factorial(2 * k - 1)
        assert sum(table50[k, v, k - v] for v in range(k + 1)) == fibonacci(k + 1)


def test_structural_violations_detects_corruption():
    s = D_series(4)
    bad = MultiSeries(s.variables, s.caps, {**s.terms, (3, 2, 2): 1})
    assert any("k=3" in msg for msg in structural_violations(bad))


def test_table_access():
    t = DominoTable.from_series(3)
    assert t[3, 2, 2] == 0
    assert t[3, -1, 0] == 0
    with pytest.raises(KeyError):
        t[4, 0, 0]


def test_table_routes_equal():
    assert DominoTable.from_oracle(6) == DominoTable.from_series(6)
    assert DominoTable.from_inclusion_exclusion(6) == DominoTable.from_series(6)


def test_specialization_examples():
    s = D_series(3)
    assert specialize(s, "vertical-only").coeff_list("w", y=2)[:3] == [2, 0, 1]
    assert specialize(s, "horizontal-only").coeff_list("z", y=3) == [7, 4, 4, 0]
    assert specialize(s, "combined").coeff_list("z", y=3) == [2, 8, 2, 3]
    with pytest.raises(ValueError):
        specialize(s, "diagonal")


def test_specializations_match_closed_forms():
    K = 12
    s = D_series(K)
    assert specialize(s, "vertical-only") == vertical_only_closed_form(K)
    assert specialize(s, "horizontal-only") == horizontal_only_closed_form(K)
    assert specialize(s, "combined") == combined_closed_form(K)


def test_table_marginals_match_specializations(table50):
    s = D_series(10)
    for k in range(11):
        assert table50.by_vertical(k) == specialize(s, "vertical-only").coeff_list("w", y=k)[: k + 1]
        assert table50.by_horizontal(k) == specialize(s, "horizontal-only").coeff_list("z", y=k)[: k + 1]
        assert table50.by_total(k) == specialize(s, "combined").coeff_list("z", y=k)[: k + 1]


def test_F_examples():
    assert F_ell(0, 5) == [1, 1, 2, 3, 5, 8]
    assert F_ell(1, 3)[3] == 2
    assert F_ell(2, 2)[2] == 1
    with pytest.raises(ValueError):
        F_ell(4, 3)
    with pytest.raises(ValueError):
        F_closed_form(3, 5)


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_F_closed_forms(ell, table50):
    assert table50.F(ell)[:20] == F_closed_form(ell, 19)


def test_json_export():
    t = DominoTable.from_series(3)
    data = json.loads(t.to_json())
    assert data["3"]["0"]["1"] == "4"
    assert data["3"]["2"]["2"] == "0"
    assert set(data) == {"0", "1", "2", "3"}
    assert t.to_json() == DominoTable.from_oracle(3).to_json()


def test_csv_export_is_sorted():
    rows = list(csv.reader(io.StringIO(DominoTable.from_series(3).to_csv())))
    assert rows[0] == ["k", "v", "h", "count"]
    keys = [tuple(map(int, r[:3])) for r in rows[1:]]
    assert keys == sorted(keys)
    assert ["3", "0", "1", "4"] in rows
