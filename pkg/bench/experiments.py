# desk-scale experiments behind `xp exp`
# grid points fan out over a joblib pool; each point rebuilds its graph from a derived
# seed, so rows depend only on (config, seed) and come back in grid order
from __future__ import annotations

import math
from typing import Any

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from bench.config import ExperimentConfig
from bounds.formulas import ExpanderParams, diameter_bound
from common.logger import logger, run_id_var
from common.timer import timer
from core.config import get_settings
from core.errors import ConfigError, ConvergenceError
from generators.deterministic import gen_margulis_expander
from generators.random_graphs import gen_erdos_renyi, gen_random_regular
from generators.rng import derive_seed, make_rng
from graph.model import Graph
from graph.oracle import QueryOracle
from pathfind.bidirectional import bidirectional_bfs
from pathfind.walks import WalkParams, bfs_plus_walks
from querygame.game import success_vs_budget
from querygame.models import make_model
from querygame.strategies import get_strategy
from spectral.estimators import lambda_exact, lambda_power, ramanujan_threshold

SCALING_COLUMNS = [
    "n", "d", "lambda_est", "median_visited", "p90_visited", "median_queries", "success_rate", "wall_time",
]
WALKS_COLUMNS = SCALING_COLUMNS + [
    "delta", "k", "walk_len", "num_walks", "max_path_len", "path_bound", "bound_violations",
]
LOWER_BOUND_COLUMNS = [
    "n", "strategy", "budget_factor", "budget", "success_rate", "connected_rate", "mean_edges_discovered", "trials",
]

# ── shared helpers ────────────────────────────────────────────────────────────

def build_graph(config: ExperimentConfig, n: int, seed: int) -> Graph:
    if config.model == "regular":
        return gen_random_regular(n, config.d, seed, method=config.method)
    if config.model == "margulis":
        return gen_margulis_expander(math.isqrt(n))
    if config.model == "er":
        return gen_erdos_renyi(n, config.p if config.p is not None else 2 * math.log(n) / n, seed)
    raise ConfigError(f"model {config.model!r} does not produce a plain graph")

def estimate_lambda_for(graph: Graph, config: ExperimentConfig) -> float:
    """
    lambda by the configured source; non-regular graphs get the exact value when it fits
    the dense budget and NaN otherwise.
    """
    d = graph.regular_degree
    if config.lambda_source == "proxy" and d is not None:
        return ramanujan_threshold(d)
    if config.lambda_source == "exact" or d is None:
        if graph.n <= get_settings().XP_DENSE_EIG_MAX_N:
            return lambda_exact(graph).lambda_est
        logger.warning(f"[exp] n={graph.n}: no lambda for a non-regular graph beyond the dense budget")
        return math.nan
    try:
        return lambda_power(graph, tol=config.spectral_tol, seed=config.seed).lambda_est
    except ConvergenceError as exc:
        logger.warning(f"[exp] n={graph.n}: power iteration stopped early, using best estimate {exc.best_estimate:.6f}")
        return exc.best_estimate

def sample_pairs(n: int, count: int, seed: int) -> list[tuple[int, int]]:
    """count uniform ordered pairs (s, t) with s != t."""
    rng = make_rng(seed)
    s = rng.integers(n, size=count)
    t = rng.integers(n - 1, size=count)
    t = t + (t >= s)
    return list(zip(s.tolist(), t.tolist()))

def _workers(config: ExperimentConfig) -> int:
    return config.workers or get_settings().XP_WORKERS

def fit_slope(ns: list[int], values: list[float]) -> float:
    """Least-squares slope of log(value) against log(n); NaN with fewer than two usable points."""
    x = np.log(np.asarray(ns, dtype=np.float64))
    y = np.asarray(values, dtype=np.float64)
    ok = y > 0
    if ok.sum() < 2:
        return math.nan
    return float(np.polyfit(x[ok], np.log(y[ok]), 1)[0])

# ── bidirectional BFS scaling ─────────────────────────────────────────────────

def _scaling_point(config: ExperimentConfig, index: int, n: int) -> dict[str, Any]:
    run_id_var.set(f"exp:{config.experiment}:n={n}")
    with timer(f"bibfs n={n}", log=False) as sw:
        graph = build_graph(config, n, derive_seed(config.seed, index, 0))
        lam = estimate_lambda_for(graph, config)
        visited, queries, found = [], [], 0
        for s, t in sample_pairs(n, config.pairs, derive_seed(config.seed, index, 1)):
            oracle = QueryOracle(graph, record_visits=False)
            result = bidirectional_bfs(oracle, s, t)
            visited.append(result.visited_count)
            queries.append(result.query_count)
            found += result.found
    row = {
        "n": n,
        "d": graph.regular_degree if graph.regular_degree is not None else graph.max_degree(),
        "lambda_est": lam,
        "median_visited": float(np.median(visited)),
        "p90_visited": float(np.percentile(visited, 90)),
        "median_queries": float(np.median(queries)),
        "success_rate": found / config.pairs,
        "wall_time": sw.elapsed_s if config.record_wall_time else 0.0,
    }
    logger.info(f"[exp/bibfs] n={n}: median visited {row['median_visited']:.1f}, success {row['success_rate']:.3f}")
    return row

def exp_bibfs_scaling(config: ExperimentConfig) -> tuple[pd.DataFrame, dict[str, Any]]:
    """One row per n; the summary carries the log-log slope of median visited nodes."""
    if config.model not in ("regular", "margulis"):
        raise ConfigError(f"bibfs scaling runs on regular or margulis graphs, got {config.model!r}")
    rows = Parallel(n_jobs=_workers(config))(
        delayed(_scaling_point)(config, i, n) for i, n in enumerate(config.n_grid)
    )
    df = pd.DataFrame(rows, columns=SCALING_COLUMNS)
    slope = fit_slope(df["n"].tolist(), df["median_visited"].tolist())
    logger.info(f"[exp/bibfs] slope of log median visited vs log n: {slope:.4f}")
    return df, {"experiment": config.experiment, "slope": slope, "rows": len(df)}

# ── BFS + random walks success ────────────────────────────────────────────────

def _walks_point(config: ExperimentConfig, index: int, n: int) -> list[dict[str, Any]]:
    run_id_var.set(f"exp:{config.experiment}:n={n}")
    graph = build_graph(config, n, derive_seed(config.seed, index, 0))
    if graph.regular_degree is None:
        raise ConfigError(f"walk experiment needs a regular graph, model {config.model!r} gave an irregular one")
    d = graph.regular_degree
    lam = estimate_lambda_for(graph, config)
    rows = []
    for j, delta in enumerate(config.deltas):
        with timer(f"bfswalks n={n} delta={delta}", log=False) as sw:
            params = WalkParams.from_spectrum(n, d, lam, delta, enforce_hypothesis=config.enforce_hypothesis)
            path_bound = diameter_bound(ExpanderParams(n=n, d=d, lam=lam)) + params.walk_len + 1
            pairs = sample_pairs(n, config.trials, derive_seed(config.seed, index, 1, j))
            visited, queries, lengths = [], [], []
            for trial, (s, t) in enumerate(pairs):
                oracle = QueryOracle(graph, record_visits=False)
                result = bfs_plus_walks(oracle, s, t, params, derive_seed(config.seed, index, 2, j, trial))
                visited.append(result.visited_count)
                queries.append(result.query_count)
                if result.found:
                    lengths.append(result.length)
        violations = sum(length > path_bound for length in lengths)
        if violations:
            logger.warning(f"[exp/walks] n={n}, delta={delta}: {violations} path(s) longer than {path_bound}")
        rows.append({
            "n": n,
            "d": d,
            "lambda_est": lam,
            "median_visited": float(np.median(visited)),
            "p90_visited": float(np.percentile(visited, 90)),
            "median_queries": float(np.median(queries)),
            "success_rate": len(lengths) / config.trials,
            "wall_time": sw.elapsed_s if config.record_wall_time else 0.0,
            "delta": delta,
            "k": params.k,
            "walk_len": params.walk_len,
            "num_walks": params.num_walks,
            "max_path_len": max(lengths) if lengths else 0,
            "path_bound": path_bound,
            "bound_violations": violations,
        })
        logger.info(f"[exp/walks] n={n}, delta={delta}: success {rows[-1]['success_rate']:.3f}, "
                    f"k={params.k}, walk_len={params.walk_len}, num_walks={params.num_walks}")
    return rows

def exp_walks_success(config: ExperimentConfig) -> tuple[pd.DataFrame, dict[str, Any]]:
    """One row per (n, delta)."""
    if config.model not in ("regular", "margulis"):
        raise ConfigError(f"walk experiment runs on regular graphs, got {config.model!r}")
    points = Parallel(n_jobs=_workers(config))(
        delayed(_walks_point)(config, i, n) for i, n in enumerate(config.n_grid)
    )
    df = pd.DataFrame([row for rows in points for row in rows], columns=WALKS_COLUMNS)
    summary = {
        "experiment": config.experiment,
        "min_success_rate": float(df["success_rate"].min()),
        "bound_violations": int(df["bound_violations"].sum()),
        "rows": len(df),
    }
    return df, summary

# ── lower-bound consistency ───────────────────────────────────────────────────

def exp_lower_bound(config: ExperimentConfig) -> tuple[pd.DataFrame, dict[str, Any]]:
    """Success and connected-trace rates at budgets floor(c sqrt(n)), per n and strategy."""
    rows = []
    for i, n in enumerate(config.n_grid):
        run_id_var.set(f"exp:{config.experiment}:n={n}")
        model = make_model(config.model, n, d=config.d, p=config.p)
        budgets = {c: int(math.floor(c * math.sqrt(n))) for c in config.budget_factors}
        for j, name in enumerate(config.strategies):
            table = success_vs_budget(
                get_strategy(name), model, sorted(set(budgets.values())), config.trials,
                derive_seed(config.seed, i, j), n_jobs=_workers(config),
            ).set_index("budget")
            for c, budget in budgets.items():
                rec = table.loc[budget]
                rows.append({
                    "n": n,
                    "strategy": name,
                    "budget_factor": c,
                    "budget": budget,
                    "success_rate": float(rec["success_rate"]),
                    "connected_rate": float(rec["connected_rate"]),
                    "mean_edges_discovered": float(rec["mean_edges_discovered"]),
                    "trials": config.trials,
                })
    df = pd.DataFrame(rows, columns=LOWER_BOUND_COLUMNS)
    return df, {"experiment": config.experiment, "rows": len(df)}

EXPERIMENTS = {
    "bibfs_scaling": exp_bibfs_scaling,
    "walks_success": exp_walks_success,
    "lower_bound": exp_lower_bound,
}

def run_experiment(config: ExperimentConfig) -> tuple[pd.DataFrame, dict[str, Any]]:
    return EXPERIMENTS[config.experiment](config)
