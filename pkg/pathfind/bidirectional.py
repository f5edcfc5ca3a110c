# bidirectional BFS: grow BFS trees from s and t one full layer at a time
from __future__ import annotations

from common.logger import logger
from core.errors import ParameterError
from graph.model import PathResult, PathStatus
from graph.oracle import QueryOracle
from pathfind.bfs import check_endpoints, tree_path

def _expand_layer(oracle: QueryOracle, frontier: list[int], parent: dict[int, int]) -> list[int]:
    """Expands every node of the current layer, returns the next layer in discovery order."""
    layer: list[int] = []
    for u in frontier:
        for w in oracle.neighbors(u).tolist():
            if w not in parent:
                parent[w] = u
                layer.append(w)
    return layer

def bidirectional_bfs(oracle: QueryOracle, s: int, t: int) -> PathResult:
    """
    Alternates one complete layer of the s-tree, then one of the t-tree, checking for a
    common node after each side's layer. The first common nodes all lie on shortest
    s-t paths; the smallest NodeId among them is the meet node.
    NotFound when a tree stops growing before the two meet.

    NOTE: visited_count counts distinct nodes in T_s U T_t, expanded_count those whose
    neighbors were queried.
    """
    if s == t:
        raise ParameterError(f"bidirectional BFS needs s != t, got s = t = {s}")
    check_endpoints(oracle, s, t)
    start_queries = oracle.query_count

    parent_s: dict[int, int] = {s: s}
    parent_t: dict[int, int] = {t: t}
    frontier_s, frontier_t = [s], [t]
    expanded = 0
    meet: int | None = None
    overlap = 0

    while True:
        expanded += len(frontier_s)
        frontier_s = _expand_layer(oracle, frontier_s, parent_s)
        common = [v for v in frontier_s if v in parent_t]
        if common:
            meet, overlap = min(common), len(common)
            break
        if not frontier_s:
            break

        expanded += len(frontier_t)
        frontier_t = _expand_layer(oracle, frontier_t, parent_t)
        common = [v for v in frontier_t if v in parent_s]
        if common:
            meet, overlap = min(common), len(common)
            break
        if not frontier_t:
            break

    visited = len(parent_s) + len(parent_t) - overlap
    queries = oracle.query_count - start_queries
    if meet is None:
        logger.debug(f"[bibfs] s={s}, t={t}: no meeting, visited={visited}")
        return PathResult(
            status=PathStatus.NOT_FOUND,
            visited_count=visited,
            query_count=queries,
            expanded_count=expanded,
            frontier_count=visited - expanded,
        )

    path = tree_path(parent_s, meet) + tree_path(parent_t, meet)[::-1][1:]
    logger.debug(f"[bibfs] s={s}, t={t}: length={len(path) - 1}, meet={meet}, visited={visited}")
    return PathResult(
        status=PathStatus.FOUND,
        path=path,
        visited_count=visited,
        query_count=queries,
        meet_node=meet,
        expanded_count=expanded,
        frontier_count=visited - expanded,
    )
