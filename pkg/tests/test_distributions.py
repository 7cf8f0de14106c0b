from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from memory_dominoes.algebra import double_factorial, fibonacci
from memory_dominoes.distributions import (
    ExactDist,
    P_bracket,
    P_polynomial,
    a_coeff,
    a_diagonal,
    bounds_check,
    dist,
    factorial_moment_V,
    mean_H,
    mean_P,
    poisson_gap,
    poisson_masses,
)

F = Fraction


def test_dist_examples():
    assert dist(2, "V").masses == (F(2, 3), 0, F(1, 3))
    assert dist(3, "P").masses == (F(2, 15), F(8, 15), F(2, 15), F(3, 15))
    assert dist(1, "H").masses == (1, 0)
    with pytest.raises(ValueError):
        dist(2, "Q")


def test_exact_dist_validation():
    with pytest.raises(ValueError):
        ExactDist(1, "V", (F(1, 2), F(1, 3)))
    with pytest.raises(ValueError):
        ExactDist(1, "V", (F(3, 2), F(-1, 2)))


def test_mean_examples():
    assert mean_P(3) == F(7, 5) == dist(3, "P").mean()
    assert mean_P(1) == 1
    assert mean_P(0) == 0
    assert abs(mean_P(10**6) - F(3, 2)) < F(1, 10**5)
    with pytest.raises(ValueError):
        mean_P(-1)


def test_means_match_table(table50):
    for k in range(51):
        assert dist(k, "P", table50).mean() == mean_P(k)
        assert dist(k, "H", table50).mean() == mean_H(k)
        for kind in "VHP":
            assert sum(dist(k, kind, table50).masses) == 1


def test_factorial_moment_examples():
    assert factorial_moment_V(2, 1) == F(2, 3)
    assert all(factorial_moment_V(k, 0) == 1 for k in range(10))
    assert factorial_moment_V(3, 4) == 0
    assert abs(factorial_moment_V(4000, 2) - F(1, 4)) < F(1, 1000)


def test_factorial_moments_match_table(table50):
    for k in range(31):
        d = dist(k, "V", table50)
        for m in range(6):
            assert d.factorial_moment(m) == factorial_moment_V(k, m)


def test_a_coeff_examples():
    assert all(a_coeff(j, 0) == 1 for j in range(6))
    assert a_coeff(0, 1) == -1
    assert a_coeff(0, 2) == 2


@given(st.integers(0, 12), st.integers(0, 12))
def test_a_coeff_sign(j, n):
    a = a_coeff(j, n)
    assert a == 0 or (a > 0) == (n % 2 == 0)


def test_a_diagonal_matches_a_coeff():
    for k in range(10):
        assert a_diagonal(k) == tuple(a_coeff(k - l, l) for l in range(k + 1))


def test_bounds_examples():
    assert bounds_check(0).passed
    assert bounds_check(4).passed and bounds_check(4).checked == 5
    assert bounds_check(20).passed


def test_bounds_up_to_60():
    assert all(bounds_check(k).passed for k in range(61))


def test_P_polynomial_examples():
    assert P_polynomial(3) == (F(2, 15), F(8, 15), F(2, 15), F(1, 5))
    for k in range(12):
        p = P_polynomial(k)
        assert sum(p) == 1
        assert p[k] == F(fibonacci(k + 1), double_factorial(2 * k - 1))


def test_P_polynomial_matches_table(table50):
    for k in list(range(9)) + [20, 50]:
        assert P_polynomial(k) == dist(k, "P", table50).masses


@given(st.integers(1, 25).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k))))
@settings(max_examples=40)
def test_P_bracket_ordering(kl):
    lo, val, hi = P_bracket(*kl)
    assert lo <= val <= hi


def test_poisson_masses_sum_close_to_one():
    m = poisson_masses(60)
    assert abs(sum(m) - 1) < Decimal("1e-40")
    assert m[0] == Decimal(-1.5).exp() or abs(m[0] - Decimal("0.22313016014842982893")) < Decimal("1e-19")


def test_poisson_gap_examples():
    g3 = poisson_gap(3)
    assert g3.approximate and 0 <= g3.gap <= 1
    assert g3.as_dict()["k"] == 3
    assert poisson_gap(3, masses=dist(3, "P").masses).gap == g3.gap


def test_poisson_gap_shrinks():
    assert poisson_gap(200).gap < poisson_gap(20).gap
