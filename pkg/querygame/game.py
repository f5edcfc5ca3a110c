# running strategies against hidden graphs and measuring success against the query budget
from __future__ import annotations

from typing import NamedTuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from common.logger import logger
from core.config import get_settings
from core.errors import NodeIndexError, ParameterError, StrategyError
from generators.rng import Seed, derive_seed, split_seed
from graph.model import Graph, MatchingGraph
from graph.oracle import MatchingOracle, QueryOracle
from querygame.models import GraphModel
from querygame.strategies import ContractingStrategy, Strategy
from querygame.trace import Trace, classify_trace

GAME_COLUMNS = ["budget", "success_rate", "connected_rate", "mean_edges_discovered", "trials"]

class TracedRun(NamedTuple):
    trace: Trace
    output: list[int]

class MetaRun(NamedTuple):
    trace: Trace
    meta_path: list[int]
    valid: bool

def _endpoints(n: int, s: int, t: int | None) -> tuple[int, int]:
    t = n - 1 if t is None else t
    for v in (s, t):
        if not 0 <= v < n:
            raise NodeIndexError(f"endpoint {v} outside [0, {n})")
    return s, t

def _play(strategy: Strategy, query, n: int, trace: Trace, budget: int, seed: Seed) -> list[int]:
    if budget < 0:
        raise ParameterError(f"budget must be >= 0, got {budget}")
    strategy.start(trace.s, trace.t, n, seed)
    for _ in range(budget):
        q = strategy.next_query(trace)
        if q is None:
            break
        if not isinstance(q, (int, np.integer)) or not 0 <= q < n:
            logger.error(f"[game] {strategy!r} asked for {q!r} outside [0, {n})")
            raise StrategyError(f"{strategy!r} queried {q!r} outside [0, {n})")
        trace.record(int(q), query(int(q)))
    return strategy.answer(trace)

def run_traced(
    strategy: Strategy,
    graph: Graph,
    budget: int,
    *,
    s: int = 0,
    t: int | None = None,
    seed: Seed = 0,
) -> TracedRun:
    """Node-incidence query game: at most `budget` queries, then the strategy's output path."""
    if strategy.kind != "node":
        raise StrategyError(f"{strategy!r} plays group queries, not node queries")
    s, t = _endpoints(graph.n, s, t)
    oracle = QueryOracle(graph, record_visits=False)
    trace = Trace(s, t, graph.n, "node")
    output = _play(strategy, oracle.node_incidence, graph.n, trace, budget, seed)
    return TracedRun(trace, output)

def run_meta_game(
    strategy: Strategy,
    mg: MatchingGraph,
    budget: int,
    *,
    s: int = 0,
    t: int | None = None,
    seed: Seed = 0,
) -> MetaRun:
    """Group-incidence query game on a graph of M_{n,d}; node strategies are contracted."""
    if strategy.kind == "node":
        strategy = ContractingStrategy(strategy)
    s, t = _endpoints(mg.n, s, t)
    oracle = MatchingOracle(mg)
    trace = Trace(s, t, mg.n, "group")
    meta_path = _play(strategy, oracle.group_incidence, mg.n, trace, budget, seed)
    return MetaRun(trace, meta_path, is_valid_meta_path(mg, meta_path, s, t))

def is_valid_path(graph: Graph, path: list[int], s: int, t: int) -> bool:
    """s ... t with every consecutive pair an edge of the graph."""
    if not path or path[0] != s or path[-1] != t:
        return False
    try:
        return all(graph.has_edge(u, v) for u, v in zip(path, path[1:]))
    except NodeIndexError:
        return False

def is_valid_meta_path(mg: MatchingGraph, groups: list[int], s: int, t: int) -> bool:
    """Every consecutive pair of groups is joined by at least one matching edge."""
    if not groups or groups[0] != s or groups[-1] != t:
        return False
    if any(not 0 <= g < mg.n for g in groups):
        return False
    return all(mg.has_group_edge(a, b) for a, b in zip(groups, groups[1:]))

def _trial(
    strategy: Strategy,
    model: GraphModel,
    budgets: list[int],
    s: int,
    t: int | None,
    trial_seed: int,
) -> list[tuple[bool, bool, int]]:
    """(success, connected, edges discovered) per budget for one hidden graph."""
    graph = model.sample(derive_seed(trial_seed, 0))
    strategy_seed = derive_seed(trial_seed, 1)
    top = max(budgets)
    if model.kind == "group":
        run = run_meta_game(strategy, graph, top, s=s, t=t, seed=strategy_seed)
        full, player = run.trace, strategy if strategy.kind == "group" else ContractingStrategy(strategy)
    else:
        run = run_traced(strategy, graph, top, s=s, t=t, seed=strategy_seed)
        full, player = run.trace, strategy
    classes = classify_trace(full, p=model.edge_probability)
    rows = []
    for budget in budgets:
        # queries never depend on the budget, so a smaller budget plays a prefix of the trace
        k = min(budget, len(full))
        prefix = full.prefix(k)
        output = player.answer(prefix)
        if model.kind == "group":
            success = is_valid_meta_path(graph, output, full.s, full.t)
        else:
            success = is_valid_path(graph, output, full.s, full.t)
        rows.append((success, classes[k].connected, classes[k].edges))
    return rows

def success_vs_budget(
    strategy: Strategy,
    model: GraphModel,
    budgets: list[int],
    trials: int,
    seed: Seed,
    *,
    s: int = 0,
    t: int | None = None,
    n_jobs: int | None = None,
) -> pd.DataFrame:
    """
    Per budget over `trials` independent hidden graphs: fraction of valid outputs, fraction
    of connected traces and mean number of discovered edges.
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    if not budgets or min(budgets) < 0:
        raise ParameterError("budgets must be a non-empty list of non-negative integers")
    budgets = sorted(set(int(b) for b in budgets))
    if model.kind == "node" and strategy.kind == "group":
        raise StrategyError(f"{strategy!r} plays group queries, {model.name} is a node model")
    n_jobs = n_jobs or get_settings().XP_WORKERS
    seeds = split_seed(seed, trials)
    logger.info(f"[game] {strategy!r} on {model.describe()}, budgets={budgets}, trials={trials}, workers={n_jobs}")
    results = Parallel(n_jobs=n_jobs)(
        delayed(_trial)(strategy, model, budgets, s, t, trial_seed) for trial_seed in seeds
    )
    outcome = np.array(results, dtype=np.float64)  # (trials, budgets, 3)
    return pd.DataFrame({
        "budget": budgets,
        "success_rate": outcome[:, :, 0].mean(axis=0),
        "connected_rate": outcome[:, :, 1].mean(axis=0),
        "mean_edges_discovered": outcome[:, :, 2].mean(axis=0),
        "trials": trials,
    }, columns=GAME_COLUMNS)
