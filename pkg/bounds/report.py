# bound-vs-empirical table behind `xp bounds`
# columns: bound, s, k, bound_value, empirical, slack  (s = -1 where no source applies,
# for confined-walk rows s holds |W|)
from __future__ import annotations

import math

import numpy as np
import pandas as pd
from pydantic import ValidationError

from bounds.exact import count_confined_walks, count_far_nodes, exact_diameter, max_mixing_deviation
from bounds.formulas import (
    ExpanderParams,
    confined_walk_bound,
    diameter_bound,
    far_node_bound,
    log_confined_walk_bound,
    mixing_deviation_bound,
)
from common.logger import logger
from core.errors import ParameterError
from generators.rng import Seed, make_rng
from graph.model import Graph
from spectral.estimators import lambda_exact

BOUND_COLUMNS = ["bound", "s", "k", "bound_value", "empirical", "slack"]

def count_violations(df: pd.DataFrame) -> int:
    """Rows whose empirical value exceeds the bound beyond float rounding."""
    return int((df["slack"] < -1e-9 * np.maximum(1.0, df["bound_value"].abs())).sum())

def _row(bound: str, s: int, k: int, value: float, empirical: float) -> dict:
    return {"bound": bound, "s": s, "k": k, "bound_value": value, "empirical": empirical, "slack": value - empirical}

def bound_report(
    graph: Graph,
    *,
    lam: float | None = None,
    sources: int = 8,
    max_walk_k: int = 8,
    mixing_k: int = 50,
    walk_sets: int = 10,
    seed: Seed = 0,
) -> pd.DataFrame:
    """
    Evaluate every (n, d, lambda) bound on `graph` next to its exact counterpart.
    lambda defaults to the exact eigensolve. Rows violating a bound have negative slack.
    """
    if not graph.is_regular():
        raise ParameterError("bound report needs a regular graph")
    lam = lambda_exact(graph).lambda_est if lam is None else lam
    try:
        params = ExpanderParams(n=graph.n, d=graph.degree(0), lam=lam)
    except ValidationError as exc:
        raise ParameterError(f"graph is not an (n, d, lambda) expander: {exc.errors()[0]['msg']}") from exc
    rng = make_rng(seed)
    source_nodes = sorted(rng.choice(graph.n, size=min(sources, graph.n), replace=False).tolist())
    rows: list[dict] = []

    diameter = exact_diameter(graph)
    rows.append(_row("diameter", -1, -1, float(diameter_bound(params)), math.inf if diameter is None else float(diameter)))
    k_max = diameter if diameter is not None else diameter_bound(params)

    for s in source_nodes:
        for k in range(k_max + 1):
            rows.append(_row("far_nodes", s, k, far_node_bound(params, k), float(count_far_nodes(graph, s, k))))
        for k in range(1, mixing_k + 1):
            rows.append(_row("mixing", s, k, mixing_deviation_bound(params, k), max_mixing_deviation(graph, s, k)))

    for _ in range(walk_sets):
        size = int(rng.integers(1, graph.n + 1))
        members = rng.choice(graph.n, size=size, replace=False)
        for k in range(1, max_walk_k + 1):
            count = count_confined_walks(graph, members, k)
            value = confined_walk_bound(params, size, k)
            # counts can exceed the float range, so violations are judged in log space
            if count and math.log(count) > log_confined_walk_bound(params, size, k) + 1e-12:
                logger.error(f"[bounds] confined walk bound violated |W|={size} k={k}")
            rows.append(_row("confined_walks", size, k, value, float(count)))

    df = pd.DataFrame(rows, columns=BOUND_COLUMNS)
    violations = count_violations(df)
    logger.info(f"[bounds] n={graph.n} d={params.d} lambda={lam:.6f}: {len(df)} rows, {violations} violations")
    return df
