# exact brute-force counterparts of the closed-form bounds, for small instances
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from bounds.formulas import distance_window
from common.logger import logger
from core.config import get_settings
from core.errors import BudgetError, ParameterError
from graph.model import Graph
from graph.oracle import QueryOracle
from pathfind.bfs import UNREACHABLE, check_endpoints, full_bfs

def _distances(graph: Graph, s: int) -> np.ndarray:
    return full_bfs(QueryOracle(graph, record_visits=False), s)

def count_far_nodes(graph: Graph, s: int, k: int) -> int:
    """Exact |{t : dist(s, t) > k}|; unreachable nodes count as far."""
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    return int(np.count_nonzero(_distances(graph, s) > k))

def eccentricity(graph: Graph, s: int) -> int | None:
    """max_t dist(s, t), or None when some node is unreachable from s."""
    dist = _distances(graph, s)
    return None if (dist == UNREACHABLE).any() else int(dist.max())

def exact_diameter(graph: Graph, max_n: int | None = None) -> int | None:
    """All-pairs BFS diameter; None for disconnected graphs."""
    limit = max_n if max_n is not None else get_settings().XP_EXACT_MAX_N
    if graph.n > limit:
        raise BudgetError(f"exact diameter needs n <= {limit}, got n={graph.n}")
    best = 0
    for s in range(graph.n):
        ecc = eccentricity(graph, s)
        if ecc is None:
            return None
        best = max(best, ecc)
    return best

def count_confined_walks(
    graph: Graph,
    nodes: Iterable[int],
    k: int,
    *,
    max_n: int | None = None,
    max_k: int | None = None,
) -> int:
    """
    Number of length-k walks (k + 1 nodes, repetition allowed) whose every node lies in
    `nodes`. Counts are Python ints, so d^k is represented exactly.
    """
    settings = get_settings()
    max_n = settings.XP_EXACT_MAX_N if max_n is None else max_n
    max_k = settings.XP_CONFINED_MAX_K if max_k is None else max_k
    if graph.n > max_n or k > max_k:
        raise BudgetError(f"confined walk count needs n <= {max_n} and k <= {max_k}, got n={graph.n}, k={k}")
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")

    members = sorted({int(v) for v in nodes})
    for v in members:
        graph._check_node(v)
    inside = np.zeros(graph.n, dtype=bool)
    inside[members] = True
    rows = {v: [u for u in graph.neighbors(v).tolist() if inside[u]] for v in members}

    counts = dict.fromkeys(members, 1)
    for _ in range(k):
        counts = {v: sum(counts[u] for u in rows[v]) for v in members}
    return sum(counts.values())

def exact_walk_distribution(
    graph: Graph,
    s: int,
    k: int,
    *,
    max_n: int | None = None,
    max_k: int | None = None,
) -> np.ndarray:
    """Distribution of a k-step uniform random walk from s on a regular graph."""
    settings = get_settings()
    max_n = settings.XP_EXACT_MAX_N if max_n is None else max_n
    max_k = settings.XP_WALK_DIST_MAX_K if max_k is None else max_k
    if graph.n > max_n or k > max_k:
        raise BudgetError(f"walk distribution needs n <= {max_n} and k <= {max_k}, got n={graph.n}, k={k}")
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if not graph.is_regular() or graph.n == 0 or graph.degree(0) == 0:
        raise ParameterError("walk distribution needs a regular graph with positive degree")
    check_endpoints(QueryOracle(graph, record_visits=False), s)

    # the adjacency matrix is symmetric, so A / d is its own transpose
    transition = graph.adjacency_matrix().astype(np.float64) / graph.degree(0)
    p = np.zeros(graph.n, dtype=np.float64)
    p[s] = 1.0
    for _ in range(k):
        p = transition @ p
    return p

def max_mixing_deviation(graph: Graph, s: int, k: int) -> float:
    """max_t |p^k_{s,t} - 1/n|."""
    return float(np.abs(exact_walk_distribution(graph, s, k) - 1.0 / graph.n).max())

def ramanujan_concentration_check(graph: Graph, s: int) -> float:
    """
    Fraction of nodes t with |dist(s, t) - lg_{d-1} n| > 3 lg_{d-1} lg n.
    Unreachable nodes always fall outside the window.
    """
    if not graph.is_regular() or graph.n == 0:
        raise ParameterError("distance concentration needs a regular graph")
    d = graph.degree(0)
    center, slack = distance_window(graph.n, d)
    dist = _distances(graph, s)
    reachable = dist != UNREACHABLE
    outside = ~reachable | (np.abs(dist.astype(np.float64) - center) > slack)
    fraction = float(np.count_nonzero(outside)) / graph.n
    logger.debug(f"[bounds] concentration n={graph.n} d={d} window={center:.3f}+-{slack:.3f} outside={fraction:.4f}")
    return fraction
