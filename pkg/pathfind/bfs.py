# breadth first search through the oracle
from __future__ import annotations

from collections import deque

import numpy as np

from core.errors import NodeIndexError
from graph.model import PathResult, PathStatus
from graph.oracle import QueryOracle

# distance of nodes the search never reaches
UNREACHABLE = np.iinfo(np.int64).max

def full_bfs(oracle: QueryOracle, s: int) -> np.ndarray:
    """Exact distances from s; unreachable nodes hold UNREACHABLE."""
    check_endpoints(oracle, s)
    dist = np.full(oracle.n, UNREACHABLE, dtype=np.int64)
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in oracle.neighbors(u).tolist():
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist

def bfs_ball(oracle: QueryOracle, s: int, limit: int) -> tuple[dict[int, int], int]:
    """
    BFS from s that stops as soon as `limit` nodes are discovered (or the component is
    exhausted). Returns (parent map in discovery order, number of expanded nodes);
    the root is its own parent.
    """
    parent: dict[int, int] = {s: s}
    queue = deque([s])
    expanded = 0
    while queue and len(parent) < limit:
        u = queue.popleft()
        expanded += 1
        for w in oracle.neighbors(u).tolist():
            if w not in parent:
                parent[w] = u
                queue.append(w)
                if len(parent) >= limit:
                    break
    return parent, expanded

def tree_path(parent: dict[int, int], v: int) -> list[int]:
    """Path root -> ... -> v along parent pointers."""
    path = [v]
    while parent[v] != v:
        v = parent[v]
        path.append(v)
    path.reverse()
    return path

def distance_array_to_list(dist: np.ndarray) -> list[int | None]:
    """JSON-friendly distances: None for unreachable."""
    return [None if x == UNREACHABLE else int(x) for x in dist]

def check_endpoints(oracle: QueryOracle, *nodes: int) -> None:
    for v in nodes:
        if not 0 <= int(v) < oracle.n:
            raise NodeIndexError(f"node {v} outside [0, {oracle.n})")

def bfs_shortest_path(oracle: QueryOracle, s: int, t: int) -> PathResult:
    """One-sided BFS from s that stops as soon as t is discovered; the baseline for bibfs."""
    check_endpoints(oracle, s, t)
    start_queries = oracle.query_count
    parent: dict[int, int] = {s: s}
    queue = deque([s])
    expanded = 0
    while queue and t not in parent:
        u = queue.popleft()
        expanded += 1
        for w in oracle.neighbors(u).tolist():
            if w not in parent:
                parent[w] = u
                queue.append(w)
                if w == t:
                    break
    found = t in parent
    return PathResult(
        status=PathStatus.FOUND if found else PathStatus.NOT_FOUND,
        path=tree_path(parent, t) if found else [],
        visited_count=len(parent),
        query_count=oracle.query_count - start_queries,
        expanded_count=expanded,
        frontier_count=len(parent) - expanded,
    )
