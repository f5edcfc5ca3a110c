# closed-form bounds against their exact counterparts
import math

import numpy as np
import pytest

from bounds.exact import (
    count_confined_walks,
    count_far_nodes,
    exact_diameter,
    exact_walk_distribution,
    max_mixing_deviation,
    ramanujan_concentration_check,
)
from bounds.formulas import (
    ExpanderParams,
    bibfs_visit_bound,
    confined_walk_bound,
    diameter_bound,
    distance_window,
    er_connected_trace_bound,
    er_success_bound,
    far_node_bound,
    matching_connected_trace_bound,
    matching_guess_bound,
    mixing_deviation_bound,
    radius_for_fraction,
    ramanujan_visit_bound,
    simple_contraction_probability,
)
from bounds.report import BOUND_COLUMNS, bound_report
from core.errors import BudgetError, ParameterError
from generators.deterministic import gen_margulis_expander
from generators.random_graphs import gen_random_regular
from graph.model import Graph
from scripts.bound_checks import CHECKS, EXACT_CHECK_MAX_N, skip_reason
from spectral.estimators import lambda_exact

def _params(graph) -> ExpanderParams:
    return ExpanderParams(n=graph.n, d=graph.degree(0), lam=lambda_exact(graph).lambda_est)

# ── formulas ──────────────────────────────────────────────────────────────────

def test_expander_params_ranges():
    assert ExpanderParams(n=10, d=3, **{"lambda": 2.0}).ratio == pytest.approx(2 / 3)
    with pytest.raises(ValueError):
        ExpanderParams(n=10, d=3, lam=3.0)
    with pytest.raises(ValueError):
        ExpanderParams(n=3, d=3, lam=1.0)

def test_far_node_bound_values():
    params = ExpanderParams(n=1024, d=4, lam=2.0)
    assert far_node_bound(params, 0) == 1024 ** 2
    assert far_node_bound(params, 10) == pytest.approx(1.0)
    assert far_node_bound(params, 6) == pytest.approx(256.0)
    with pytest.raises(ParameterError):
        far_node_bound(params, -1)

def test_radius_for_fraction_values():
    params = ExpanderParams(n=2 ** 20, d=2, lam=1.0)
    assert radius_for_fraction(params, 1.0) == pytest.approx(10.0)
    assert radius_for_fraction(params, 1 / 16) == pytest.approx(12.0)
    assert radius_for_fraction(ExpanderParams(n=2, d=1, lam=0.5), 1.0) == pytest.approx(0.5)
    with pytest.raises(ParameterError):
        radius_for_fraction(params, 0.0)

def test_diameter_bound_values():
    assert diameter_bound(ExpanderParams(n=1024, d=2, lam=1.0)) == 10
    assert diameter_bound(ExpanderParams(n=1000, d=10, lam=1.0)) == 3

def test_confined_walk_bound_values():
    params = ExpanderParams(n=10, d=3, lam=2.0)
    assert confined_walk_bound(params, 10, 2) == pytest.approx(90.0)
    assert confined_walk_bound(params, 5, 2) == pytest.approx(31.25)
    assert confined_walk_bound(params, 7, 0) == pytest.approx(7.0)
    assert confined_walk_bound(params, 0, 3) == 0.0
    assert confined_walk_bound(ExpanderParams(n=10, d=3, lam=2.0), 10, 10_000) == math.inf

def test_mixing_deviation_bound_values():
    assert mixing_deviation_bound(ExpanderParams(n=4, d=2, lam=1.0), 0) == 1.0
    assert mixing_deviation_bound(ExpanderParams(n=4, d=2, lam=1.0), 10) == pytest.approx(2 ** -10)
    assert mixing_deviation_bound(ExpanderParams(n=10, d=3, lam=2.0), 3) == pytest.approx(8 / 27)

def test_visit_bounds():
    params = ExpanderParams(n=1024, d=3, lam=1.5)
    # ceil((1/4) lg_2(10240)) = 4
    assert bibfs_visit_bound(params, 0.1) == pytest.approx(16.0)
    assert ramanujan_visit_bound(math.e ** 2) == pytest.approx(math.e * 2 ** 1.5)
    with pytest.raises(ParameterError):
        bibfs_visit_bound(params, 1.0)

def test_distance_window():
    center, slack = distance_window(4, 3)
    assert center == pytest.approx(2.0)
    assert slack == pytest.approx(3.0)
    with pytest.raises(ParameterError):
        distance_window(100, 2)

def test_lower_bound_formulas():
    assert er_connected_trace_bound(100, 0.01, 0) == pytest.approx(0.01)
    assert er_success_bound(100, 0.01, 0) == pytest.approx(0.02)
    assert matching_connected_trace_bound(100, 3, 10) == pytest.approx(2700 / 239)
    assert matching_guess_bound(100, 3, 10) == pytest.approx(9 / 239)
    assert matching_guess_bound(10, 3, 5) == math.inf
    assert simple_contraction_probability(3) == pytest.approx(math.exp(-2))

# ── exact counterparts ────────────────────────────────────────────────────────

def test_count_far_nodes(c6, petersen):
    assert count_far_nodes(c6, 0, 3) == 0
    assert count_far_nodes(c6, 0, 1) == 3
    assert count_far_nodes(petersen, 0, 1) == 6
    assert count_far_nodes(petersen, 0, 2) == 0

def test_exact_diameter(c6, petersen, cubic_128):
    assert exact_diameter(c6) == 3
    assert exact_diameter(petersen) == 2
    assert exact_diameter(Graph.from_edges(4, [(0, 1), (2, 3)])) is None
    assert exact_diameter(cubic_128) <= diameter_bound(_params(cubic_128))
    with pytest.raises(BudgetError):
        exact_diameter(petersen, max_n=5)

def test_count_confined_walks(c6):
    assert count_confined_walks(c6, range(6), 2) == 24
    assert count_confined_walks(c6, [0], 1) == 0
    assert count_confined_walks(c6, [0], 0) == 1
    assert count_confined_walks(c6, [0, 1, 2], 2) == 6
    with pytest.raises(BudgetError):
        count_confined_walks(c6, range(6), 65)

def test_confined_walk_counts_are_exact_integers(k4):
    # 4 * 3^40 does not fit a double exactly
    assert count_confined_walks(k4, range(4), 40, max_k=64) == 4 * 3 ** 40

def test_exact_walk_distribution(k4, petersen):
    assert exact_walk_distribution(k4, 2, 0).tolist() == [0.0, 0.0, 1.0, 0.0]
    assert exact_walk_distribution(k4, 0, 1) == pytest.approx([0.0, 1 / 3, 1 / 3, 1 / 3])
    dist = exact_walk_distribution(petersen, 0, 20)
    assert dist.sum() == pytest.approx(1.0, abs=1e-12)
    assert max_mixing_deviation(petersen, 0, 20) <= (2 / 3) ** 20

def test_exact_walk_distribution_needs_regular(star5):
    with pytest.raises(ParameterError):
        exact_walk_distribution(star5, 0, 1)

def test_concentration_check(k4, c6):
    assert ramanujan_concentration_check(k4, 0) == 0.0
    with pytest.raises(ParameterError):
        ramanujan_concentration_check(c6, 0)

@pytest.mark.slow
def test_concentration_on_a_large_cubic_graph():
    graph = gen_random_regular(2 ** 14, 3, seed=3)
    assert ramanujan_concentration_check(graph, 0) <= 0.1

# ── bounds hold on every small test graph ─────────────────────────────────────

@pytest.mark.parametrize("name", ["k4", "petersen", "cubic_128"])
def test_bounds_hold_exhaustively(name, request):
    graph = request.getfixturevalue(name)
    params = _params(graph)
    rng = np.random.default_rng(5)
    for s in range(0, graph.n, max(1, graph.n // 16)):
        for k in range(0, 8):
            assert count_far_nodes(graph, s, k) <= far_node_bound(params, k) + 1e-9
            assert max_mixing_deviation(graph, s, k) <= mixing_deviation_bound(params, k) + 1e-12
    for _ in range(10):
        members = rng.choice(graph.n, size=int(rng.integers(1, graph.n + 1)), replace=False)
        for k in range(0, 6):
            bound = confined_walk_bound(params, members.size, k)
            assert count_confined_walks(graph, members, k) <= bound * (1 + 1e-9)

def test_bound_report(petersen):
    df = bound_report(petersen, sources=3, walk_sets=4, mixing_k=10, max_walk_k=4)
    assert list(df.columns) == BOUND_COLUMNS
    assert set(df["bound"]) == {"diameter", "far_nodes", "mixing", "confined_walks"}
    assert (df["slack"] >= -1e-9 * np.maximum(1.0, df["bound_value"].abs())).all()
    diameter = df[df["bound"] == "diameter"].iloc[0]
    assert diameter["empirical"] == 2 and diameter["bound_value"] == 6

def test_bound_report_rejects_non_expanders(c6, star5):
    with pytest.raises(ParameterError):
        bound_report(c6)
    with pytest.raises(ParameterError):
        bound_report(star5)

def test_bound_check_skips_are_explained(petersen):
    margulis = gen_margulis_expander(20)
    assert not margulis.is_regular()
    for check in CHECKS:
        assert "not regular" in skip_reason(margulis, check)
        assert skip_reason(petersen, check) is None
    big = gen_random_regular(EXACT_CHECK_MAX_N * 2, 3, seed=1)
    assert skip_reason(big, "far-node") is None
    assert skip_reason(big, "mixing") == f"n={EXACT_CHECK_MAX_N * 2} > {EXACT_CHECK_MAX_N}"
