# seeded graph constructions
import math
from collections import Counter

import numpy as np
import pytest

from core.errors import GenerationError, ParameterError
from generators.deterministic import complete_graph, gen_margulis_expander
from generators.matching import gen_matching_model
from generators.random_graphs import gen_erdos_renyi, gen_random_regular, measure_acceptance_rate
from generators.rng import derive_seed, make_rng, split_seed
from graph.oracle import QueryOracle
from graph.validation import validate
from pathfind.bfs import UNREACHABLE, full_bfs

def test_er_extreme_probabilities():
    assert gen_erdos_renyi(4, 1e-12, seed=0).m == 0
    dense = gen_erdos_renyi(4, 1 - 1e-12, seed=0)
    assert np.array_equal(dense.edges(), complete_graph(4).edges())

def test_er_edge_count_within_three_sigma():
    n, p = 1000, 0.01
    graph = gen_erdos_renyi(n, p, seed=42)
    pairs = n * (n - 1) / 2
    mean, sigma = pairs * p, math.sqrt(pairs * p * (1 - p))
    assert abs(graph.m - mean) <= 3 * sigma
    assert validate(graph).valid

def test_er_rejects_bad_probability():
    with pytest.raises(ParameterError):
        gen_erdos_renyi(10, 0.0, seed=0)
    with pytest.raises(ParameterError):
        gen_erdos_renyi(10, 1.0, seed=0)

def test_er_is_reproducible():
    a = gen_erdos_renyi(500, 0.02, seed=7)
    b = gen_erdos_renyi(500, 0.02, seed=7)
    assert a == b and a.fingerprint() == b.fingerprint()
    assert gen_erdos_renyi(500, 0.02, seed=8) != a

def test_regular_small_cases(k4):
    assert gen_random_regular(4, 3, seed=0) == k4
    ring = gen_random_regular(6, 2, seed=1)
    assert ring.regular_degree == 2
    assert np.all(ring.degrees() == 2)

@pytest.mark.parametrize("method", ["configuration", "pairing"])
def test_regular_methods_give_valid_graphs(method):
    graph = gen_random_regular(200, 4, seed=5, method=method)
    report = validate(graph)
    assert report.valid and report.degree == 4

def test_regular_large_degree_uses_pairing():
    graph = gen_random_regular(200, 8, seed=2)
    assert validate(graph).valid
    assert graph.regular_degree == 8

def test_regular_parameter_errors():
    with pytest.raises(ParameterError):
        gen_random_regular(5, 3, seed=0)
    with pytest.raises(ParameterError):
        gen_random_regular(4, 4, seed=0)

def test_regular_rejection_cap():
    with pytest.raises(GenerationError):
        gen_random_regular(50, 6, seed=0, method="configuration", max_attempts=1)

def test_regular_is_reproducible():
    assert gen_random_regular(300, 3, seed=9) == gen_random_regular(300, 3, seed=9)

def test_acceptance_rate_near_asymptotic():
    rate = measure_acceptance_rate(200, 3, attempts=2000, seed=1)
    assert abs(rate - math.exp(-2)) < 0.03

def test_matching_model_tiny_cases():
    assert gen_matching_model(1, 2, seed=0).pairs() == [((0, 0), (0, 1))]
    assert gen_matching_model(2, 1, seed=0).pairs() == [((0, 0), (1, 0))]
    with pytest.raises(ParameterError):
        gen_matching_model(3, 1, seed=0)

def test_matching_model_is_a_perfect_matching():
    mg = gen_matching_model(50, 3, seed=4)
    partner = mg.partner_array
    assert np.all(partner[partner] == np.arange(150))
    assert len(mg.pairs()) == 75

@pytest.mark.slow
def test_matching_model_two_groups_is_uniform():
    # the 3 perfect matchings of 4 half-nodes
    trials = 100_000
    counts = Counter(tuple(gen_matching_model(2, 2, seed=seed).pairs()) for seed in range(trials))
    assert len(counts) == 3
    for count in counts.values():
        assert abs(count / trials - 1 / 3) <= 0.01


def test_margulis_small_and_connected():
    small = gen_margulis_expander(3)
    assert small.n == 9
    assert small.max_degree() <= 8
    assert validate(small).valid
    big = gen_margulis_expander(20)
    assert big.n == 400
    assert not np.any(full_bfs(QueryOracle(big), 0) == UNREACHABLE)

def test_margulis_spectral_gap():
    from spectral.estimators import lambda_exact

    assert lambda_exact(gen_margulis_expander(20)).lambda_est / 8 <= 0.95

def test_seed_streams():
    assert split_seed(5, 3) == split_seed(5, 3)
    assert len(set(split_seed(5, 3))) == 3
    assert derive_seed(5, 1, 2) == derive_seed(5, 1, 2) != derive_seed(5, 2, 1)
    assert make_rng(3).integers(1 << 30) == make_rng(3).integers(1 << 30)
    with pytest.raises(ParameterError):
        make_rng(-1)
