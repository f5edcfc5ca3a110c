# lambda estimation: dense eigensolve and deflated power iteration
import math

import pytest

from core.errors import BudgetError, ConvergenceError, ParameterError
from generators.random_graphs import gen_random_regular
from graph.model import Graph
from spectral.estimators import estimate_lambda, lambda_exact, lambda_power, ramanujan_threshold

def test_exact_known_spectra(k4, c6, petersen):
    k4_report = lambda_exact(k4)
    assert k4_report.lambda_est == pytest.approx(1.0, abs=1e-9)
    assert k4_report.is_ramanujan and k4_report.is_expander

    c6_report = lambda_exact(c6)
    assert c6_report.lambda_est == pytest.approx(2.0, abs=1e-9)
    assert not c6_report.is_expander

    p_report = lambda_exact(petersen)
    assert p_report.lambda_2 == pytest.approx(1.0, abs=1e-9)
    assert p_report.lambda_min == pytest.approx(-2.0, abs=1e-9)
    assert p_report.lambda_est == pytest.approx(2.0, abs=1e-9)
    assert p_report.is_ramanujan
    assert p_report.ratio == pytest.approx(2 / 3)

def test_ramanujan_threshold():
    assert ramanujan_threshold(3) == pytest.approx(2 * math.sqrt(2))

def test_exact_budget(petersen):
    with pytest.raises(BudgetError):
        lambda_exact(petersen, max_n=5)

def test_power_matches_exact_on_small_graphs(k4, petersen):
    for graph in (k4, petersen):
        power = lambda_power(graph, tol=1e-9, seed=1)
        assert power.lambda_est == pytest.approx(lambda_exact(graph).lambda_est, abs=1e-6)
        assert power.method == "power-iteration"

def test_power_never_reports_the_trivial_eigenvalue(cubic_128):
    report = lambda_power(cubic_128, tol=1e-6, max_iter=100_000, seed=2)
    assert report.lambda_est < 3 - 1e-3
    assert report.ones_overlap < 1e-6

def test_power_defaults_on_small_graphs(k4, petersen):
    assert lambda_power(k4).lambda_est == pytest.approx(1.0, abs=1e-6)
    assert lambda_power(petersen).lambda_est == pytest.approx(2.0, abs=1e-6)

def test_power_defaults_match_exact_on_cubic_2048():
    graph = gen_random_regular(2048, 3, seed=1)
    exact = lambda_exact(graph)
    power = lambda_power(graph)
    assert abs(power.lambda_est - exact.lambda_est) <= 1e-3
    assert power.ones_overlap <= 1e-8

def test_power_convergence_error_carries_estimate(cubic_128):
    with pytest.raises(ConvergenceError) as info:
        lambda_power(cubic_128, tol=1e-12, max_iter=1)
    assert 0.0 <= info.value.best_estimate <= 3.0
    assert info.value.iterations == 2

def test_power_needs_regular_connected(star5):
    with pytest.raises(ParameterError):
        lambda_power(star5)
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 2)
    with pytest.raises(ParameterError):
        lambda_power(two_triangles)

def test_estimate_picks_exact_under_budget(petersen):
    assert estimate_lambda(petersen).method == "exact"
