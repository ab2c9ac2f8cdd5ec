import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mobility.errors import DomainError, EvenGamma, ZeroMean
from mobility.inequality import (
    equal_destination,
    extended_gini,
    generalized_entropy,
    gini,
    kolm_family,
    mean_absolute_deviation,
    mean_absolute_log_deviation,
    reduce_mobility,
)
from mobility.measures import MeasureSpec

import oracles

X = [10.0, 20.0, 40.0]
positive = st.lists(st.floats(1.0, 100.0), min_size=2, max_size=12)


def test_examples():
    # direct summation gives 0.14291239755557553
    assert generalized_entropy(X, 1) == pytest.approx(0.14291239755557553, rel=1e-13)
    assert kolm_family(X, 0) == pytest.approx(700 / 9, rel=1e-13)
    assert gini(X, "absolute") == pytest.approx(20 / 3)
    assert gini(X) == pytest.approx(2 / 7)
    assert gini([30, 60, 50]) == pytest.approx(1 / 7)
    assert extended_gini(X, 1) == pytest.approx(10 / 3)
    # oracle: class-2 gamma=3 sum on the equal-destination profile
    assert extended_gini(X, 3) == pytest.approx(0.58641975308642, rel=1e-12)


@pytest.mark.parametrize("alpha", [-1, 0, 0.5, 1, 2])
def test_zero_on_equal_distribution(alpha):
    x = [7.0] * 4
    assert generalized_entropy(x, alpha) == 0
    assert kolm_family(x, alpha / 10) == 0
    assert gini(x) == 0 and gini(x, "absolute") == 0
    assert extended_gini(x, 3) == 0


@given(positive.filter(lambda x: np.ptp(x) > 1e-3), st.sampled_from([-1, 0, 0.5, 1, 2]))
def test_positive_when_unequal(x, alpha):
    assert generalized_entropy(x, alpha) > 0
    assert kolm_family(x, alpha / 20) > 0
    assert gini(x) > 0
    assert extended_gini(x, 1) > 0 and extended_gini(x, 3) > 0


@pytest.mark.parametrize("n", range(1, 7))
def test_ge_brute_force(n):
    for x in itertools.product(range(1, 6), repeat=n):
        if n > 4 and sum(x) % 3:
            continue  # thin the largest grids
        for alpha in (0, 1, 2, -0.5):
            assert generalized_entropy(x, alpha) == pytest.approx(oracles.ge(list(x), alpha), abs=1e-12)


@given(positive)
def test_gini_matches_pairwise(x):
    assert gini(x, "absolute") == pytest.approx(oracles.gini_abs(x), rel=1e-12)


@given(positive, st.floats(0.01, 100), st.floats(-50, 50))
def test_invariances(x, lam, delta):
    x = np.array(x)
    assert gini(lam * x) == pytest.approx(gini(x), abs=1e-12)
    assert gini(x + delta, "absolute") == pytest.approx(gini(x, "absolute"), abs=1e-10)
    assert kolm_family(x + delta, 0.05) == pytest.approx(kolm_family(x, 0.05), rel=1e-10, abs=1e-10)


def test_errors():
    with pytest.raises(ZeroMean):
        gini([-1, 1])
    with pytest.raises(EvenGamma):
        extended_gini(X, 2)
    with pytest.raises(DomainError):
        generalized_entropy([0, 1], 1)


def test_reduction_examples():
    assert reduce_mobility(X, MeasureSpec("S1", alpha=0)) == pytest.approx(generalized_entropy(X, 0), abs=1e-12)
    assert reduce_mobility(X, "A2") == pytest.approx(10 / 3)
    assert reduce_mobility(X, "S2") == pytest.approx(gini(X, "absolute") / (2 * np.mean(X)))
    assert equal_destination(X).v.tolist() == [70 / 3] * 3


@given(positive, st.sampled_from([-1, 0, 0.5, 1, 2]))
def test_bridge_class1(x, alpha):
    assert reduce_mobility(x, MeasureSpec("S1", alpha=alpha)) == pytest.approx(
        generalized_entropy(x, alpha), rel=1e-10, abs=1e-12
    )
    a = alpha / 20
    assert reduce_mobility(x, MeasureSpec("T1", alpha=a)) == pytest.approx(kolm_family(x, a), rel=1e-10, abs=1e-10)


@given(positive, st.sampled_from([1, 3, 5]))
def test_bridge_class2(x, gamma):
    mu = np.mean(x)
    g = extended_gini(x, gamma)
    assert reduce_mobility(x, MeasureSpec("A2", gamma=gamma)) == pytest.approx(g, abs=1e-10)
    assert reduce_mobility(x, MeasureSpec("T2", gamma=gamma)) == pytest.approx(g, abs=1e-10)
    assert reduce_mobility(x, MeasureSpec("S2", gamma=gamma)) == pytest.approx(g / mu, abs=1e-12)
    assert extended_gini(x, gamma, "relative") == pytest.approx(g / mu)
    if gamma == 1:
        assert g == pytest.approx(gini(x, "absolute") / 2, abs=1e-10)


@given(positive)
def test_bridge_fields_ok(x):
    assert reduce_mobility(x, "FO1") == pytest.approx(mean_absolute_deviation(x), rel=1e-12)
    assert reduce_mobility(x, "FO2") == pytest.approx(mean_absolute_log_deviation(x), rel=1e-12, abs=1e-15)
