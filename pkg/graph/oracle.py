# metered query access, the only read path the search and game algorithms use
from __future__ import annotations

import numpy as np

from core.errors import NodeIndexError
from graph.model import Graph, MatchingGraph, QueryCounts

Edge = tuple[int, int]
HalfNode = tuple[int, int]
HalfEdge = tuple[HalfNode, HalfNode]

class QueryOracle:
    """
    A metered access session over a Graph.
    Upper-bound model: degree(v) and neighbor(v, j), one count each.
    Lower-bound model: node_incidence(v) returns every edge at v for a single count.

    NOTE:
    - counters only ever grow; one session belongs to one thread, concurrent experiments
      open one oracle each over the shared (immutable) graph
    - n and regular_degree are public graph parameters and cost nothing
    - visited_log keeps first-reveal order of nodes whose full neighborhood was returned
    """

    def __init__(self, graph: Graph, *, record_visits: bool = True):
        self._graph = graph
        self._record_visits = record_visits
        self.degree_queries = 0
        self.neighbor_queries = 0
        self.incidence_queries = 0
        self._visited: dict[int, None] = {}

    @property
    def n(self) -> int:
        return self._graph.n

    @property
    def regular_degree(self) -> int | None:
        return self._graph.regular_degree

    @property
    def visited_log(self) -> list[int]:
        return list(self._visited)

    @property
    def query_count(self) -> int:
        return self.degree_queries + self.neighbor_queries + self.incidence_queries

    def snapshot(self) -> QueryCounts:
        return QueryCounts(
            degree=self.degree_queries,
            neighbor=self.neighbor_queries,
            incidence=self.incidence_queries,
        )

    def _reveal(self, v: int) -> None:
        if self._record_visits:
            self._visited.setdefault(v, None)

    # ── queries ───────────────────────────────────────────────────────────────

    def degree(self, v: int) -> int:
        v = self._graph._check_node(v)
        self.degree_queries += 1
        return self._graph._degree(v)

    def neighbor(self, v: int, j: int) -> int:
        v = self._graph._check_node(v)
        deg = self._graph._degree(v)
        if not 0 <= j < deg:
            raise NodeIndexError(f"neighbor index {j} outside [0, {deg}) at node {v}")
        self.neighbor_queries += 1
        return int(self._graph._row(v)[j])

    def neighbors(self, v: int) -> np.ndarray:
        """
        Whole sorted row of v. Metered exactly as one degree query followed by
        degree(v) neighbor queries.
        """
        v = self._graph._check_node(v)
        row = self._graph._row(v)
        self.degree_queries += 1
        self.neighbor_queries += row.size
        self._reveal(v)
        return row

    def node_incidence(self, v: int) -> frozenset[Edge]:
        v = self._graph._check_node(v)
        self.incidence_queries += 1
        self._reveal(v)
        return frozenset((v, int(u)) for u in self._graph._row(v))


class MatchingOracle:
    """
    Metered group-incidence access to a graph of M_{n,d}.
    A query names a group i and returns the d matching edges at half-nodes (i, 0..d-1).
    """

    def __init__(self, mg: MatchingGraph):
        self._mg = mg
        self.group_incidence_queries = 0
        self._visited: dict[int, None] = {}

    @property
    def n(self) -> int:
        return self._mg.n

    @property
    def d(self) -> int:
        return self._mg.d

    @property
    def visited_log(self) -> list[int]:
        return list(self._visited)

    @property
    def query_count(self) -> int:
        return self.group_incidence_queries

    def snapshot(self) -> QueryCounts:
        return QueryCounts(group_incidence=self.group_incidence_queries)

    def group_incidence(self, i: int) -> frozenset[HalfEdge]:
        i = int(i)
        if not 0 <= i < self._mg.n:
            raise NodeIndexError(f"group {i} outside [0, {self._mg.n})")
        self.group_incidence_queries += 1
        self._visited.setdefault(i, None)
        return frozenset(self._mg.group_edges(i))
