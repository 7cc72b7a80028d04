import math
from itertools import combinations

import numpy as np
import pytest

from stardisc.bounds import (
    hoeffding_bound,
    hoeffding_epsilon,
    hoeffding_feasible,
    hps_inner_max,
    hps_weighted_rate,
    rate,
    wang_bound,
    wang_terms,
)
from stardisc.discrepancy import ProductWeights, star_discrepancy_exact
from stardisc.errors import BadKind, MissingConstant, NotPrimePower, WeightsTooShort
from stardisc.generators import halton, random_points


def union_holds(eps, N, s):
    # direct form of the union-bound condition, no logs
    return 2.0 * (math.ceil(s / eps) + 1) ** s * math.exp(-N * eps * eps / 2.0) <= 1.0


def grid_scan_epsilon(N, s, step=1e-6):
    """Independent oracle: first eps on a 1e-6 grid meeting the condition."""
    k = np.arange(1, int(round(1 / step)) + 1)
    eps = k * step
    with np.errstate(over="ignore"):
        lhs = 2.0 * (np.ceil(s / eps) + 1.0) ** s * np.exp(-N * eps * eps / 2.0)
    ok = np.nonzero(lhs <= 1.0)[0]
    return float(eps[ok[0]]) if ok.size else 1.0


def brute_subset_max(terms, weight_fn=lambda u, t: np.prod([t[j] for j in u])):
    s = len(terms)
    return max(weight_fn(u, terms) for k in range(1, s + 1) for u in combinations(range(s), k))


def test_rate_examples():
    assert rate("hnww", 100, 4) == pytest.approx(0.2, abs=1e-15)
    assert rate("asymptotic-upper", math.e ** 2, 2) == pytest.approx(2 / math.e ** 2, rel=1e-12)
    assert rate("thm2", 100, 1) == pytest.approx(0.1 * math.sqrt(math.log(100)), rel=1e-12)
    assert rate("thm2", 100, 1) == pytest.approx(0.21460, abs=5e-6)
    with pytest.raises(BadKind):
        rate("nope", 10, 2)


@pytest.mark.parametrize("N,s", [(10 ** 3, 2), (10 ** 5, 5), (10 ** 6, 10)])
def test_hoeffding_against_grid_scan(N, s):
    eps = hoeffding_epsilon(N, s)
    assert abs(eps - grid_scan_epsilon(N, s)) <= 2e-6
    assert union_holds(eps, N, s)
    assert not union_holds(eps - 1e-6, N, s)


def test_hoeffding_golden_1e6_10():
    # grid-scan oracle: first feasible eps on the 1e-6 grid is 0.011683
    assert hoeffding_epsilon(10 ** 6, 10) == pytest.approx(0.011683, abs=2e-6)
    assert hoeffding_bound(10 ** 6, 10) == pytest.approx(0.023366, abs=4e-6)


def test_hoeffding_monotone():
    for s in (1, 2, 3, 5, 10):
        for N in (10, 100, 1000, 10 ** 4, 10 ** 5):
            assert hoeffding_bound(2 * N, s) <= hoeffding_bound(N, s)
            assert hoeffding_bound(N, s + 1) >= hoeffding_bound(N, s)
            assert 0 < hoeffding_bound(N, s) <= 1


def test_hoeffding_trivial_when_infeasible():
    assert not hoeffding_feasible(1.0, 5, 3)
    assert hoeffding_bound(5, 3) == 1.0


@pytest.mark.parametrize("N,s", [(16, 2), (64, 2), (64, 3)])
def test_hoeffding_dominates_constructions(N, s):
    candidates = [halton(N, s)] + [random_points(N, s, seed) for seed in range(5)]
    best = min(star_discrepancy_exact(P).value for P in candidates)
    assert best <= hoeffding_bound(N, s)


def test_hps_examples():
    assert hps_weighted_rate(100, 4, ProductWeights.ones(4)) == pytest.approx(math.sqrt(math.log(4) / 100) * 2, rel=1e-14)
    assert hps_inner_max(ProductWeights([0.5, 0.5]), 2) == 0.5
    assert hps_weighted_rate(10, 2, ProductWeights([0.5, 0.5])) == pytest.approx(0.5 * math.sqrt(math.log(2) / 10))
    assert hps_inner_max(ProductWeights([1, 0.9, 0.1]), 3) == pytest.approx(0.9 * math.sqrt(2), abs=1e-15)
    # s = 1 uses s' = 2 inside the log
    assert hps_weighted_rate(4, 1, ProductWeights([1.0])) == pytest.approx(math.sqrt(math.log(2) / 4))


def test_hps_matches_brute_force():
    rng = np.random.default_rng(7)
    for _ in range(100):
        s = int(rng.integers(1, 11))
        g = rng.random(s) * rng.choice([0.5, 1.0, 2.0])
        brute = brute_subset_max(g, lambda u, t: np.prod([t[j] for j in u]) * math.sqrt(len(u)))
        assert hps_inner_max(ProductWeights(g), s) == pytest.approx(brute, abs=1e-12)


def test_wang_examples():
    # choose weights so that the factors t_j come out as stated
    N, q, C = 50, 2, 1.0

    def weights_for(ts):
        return ProductWeights([t / (C * j * math.log(j + q) * math.log(q * N)) for j, t in enumerate(ts, 1)])

    assert wang_bound(N, 3, q, weights_for([0.4, 0.2, 0.1]), C) == pytest.approx(0.4 / N, rel=1e-12)
    assert wang_bound(N, 3, q, weights_for([2, 3, 0.5]), C) == pytest.approx(6 / N, rel=1e-12)
    with pytest.raises(MissingConstant):
        wang_bound(N, 3, q, weights_for([1, 1, 1]), None)
    with pytest.raises(NotPrimePower):
        wang_bound(N, 3, 6, weights_for([1, 1, 1]), C)
    with pytest.raises(WeightsTooShort):
        wang_bound(N, 4, q, weights_for([1, 1, 1]), C)


def test_wang_golden_poly3():
    w = ProductWeights([j ** -3.0 for j in range(1, 9)])
    brute = brute_subset_max(wang_terms(1024, 8, 2, w, 1.0)) / 1024
    assert brute == pytest.approx(0.029473120382454955, rel=1e-12)
    assert wang_bound(1024, 8, 2, w, 1.0) == pytest.approx(brute, abs=1e-12)


def test_wang_matches_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(100):
        s = int(rng.integers(1, 11))
        w = ProductWeights(rng.random(s) * rng.choice([0.01, 0.1, 1.0]))
        q = int(rng.choice([2, 3, 4, 5, 7, 8, 9]))
        N, C = int(rng.integers(1, 5000)), float(rng.uniform(0.1, 3.0))
        brute = brute_subset_max(wang_terms(N, s, q, w, C)) / N
        assert wang_bound(N, s, q, w, C) == pytest.approx(brute, abs=1e-12)
