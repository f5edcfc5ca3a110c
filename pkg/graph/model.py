# graph storage: immutable CSR adjacency, the matching model, and the result types
# every algorithm reports back
from __future__ import annotations

import hashlib
from enum import Enum
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sps
from pydantic import BaseModel, Field, computed_field

from core.errors import NodeIndexError, ParameterError

def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr

class Graph:
    """
    Immutable undirected graph over nodes 0..n-1, stored as CSR.
    - offsets: int64, length n+1; neighbors: int32, length 2m
    - every row is sorted ascending; neighbor(v, j) is defined against that order
    - regular_degree is the declared d of a d-regular graph, None otherwise

    NOTE: from_edges(simplify=True) always yields a simple symmetric graph. The raw paths
    (simplify=False, from_adjacency) keep whatever they are given so that validate()
    can report the defects.
    """

    __slots__ = ("_offsets", "_neighbors", "_regular_degree")

    def __init__(self, offsets: np.ndarray, neighbors: np.ndarray, regular_degree: int | None = None):
        offsets = np.array(offsets, dtype=np.int64, copy=True)
        neighbors = np.array(neighbors, dtype=np.int32, copy=True)
        if offsets.ndim != 1 or offsets.size == 0 or offsets[0] != 0 or offsets[-1] != neighbors.size:
            raise ParameterError("CSR offsets must start at 0 and end at len(neighbors)")
        if np.any(np.diff(offsets) < 0):
            raise ParameterError("CSR offsets must be non-decreasing")
        self._offsets = _frozen(offsets)
        self._neighbors = _frozen(neighbors)
        self._regular_degree = None if regular_degree is None else int(regular_degree)

    # ── constructors ───────────────────────────────────────────────────────────

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: np.ndarray | Sequence[tuple[int, int]],
        regular_degree: int | None = None,
        *,
        simplify: bool = True,
    ) -> "Graph":
        """
        Builds a graph from an undirected edge list.
        - simplify=True drops self-loops and merges parallel edges, and checks a declared d
        - simplify=False keeps loops and duplicates (a raw multigraph, for validate())
        """
        if n < 0:
            raise ParameterError(f"n must be non-negative, got {n}")
        e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise NodeIndexError(f"edge endpoint outside [0, {n})")
        if simplify:
            e = e[e[:, 0] != e[:, 1]]
            e = np.unique(np.sort(e, axis=1), axis=0)
        src = np.concatenate([e[:, 0], e[:, 1]])
        dst = np.concatenate([e[:, 1], e[:, 0]])
        order = np.lexsort((dst, src))
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
        graph = cls(offsets, dst[order], regular_degree)
        if simplify and regular_degree is not None:
            degrees = graph.degrees()
            if degrees.size and not np.all(degrees == regular_degree):
                raise ParameterError(f"declared regular degree {regular_degree} but degrees span "
                                     f"[{degrees.min()}, {degrees.max()}]")
        return graph

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]], regular_degree: int | None = None) -> "Graph":
        """Raw constructor from per-node neighbor lists; rows are sorted, nothing else is checked."""
        rows = [sorted(int(u) for u in row) for row in adjacency]
        offsets = np.zeros(len(rows) + 1, dtype=np.int64)
        np.cumsum([len(r) for r in rows], out=offsets[1:])
        flat = np.fromiter((u for r in rows for u in r), dtype=np.int64, count=int(offsets[-1]))
        return cls(offsets, flat, regular_degree)

    # ── shape ──────────────────────────────────────────────────────────────────

    @property
    def n(self) -> int:
        return self._offsets.size - 1

    @property
    def m(self) -> int:
        return self._neighbors.size // 2

    @property
    def regular_degree(self) -> int | None:
        return self._regular_degree

    @property
    def offsets(self) -> np.ndarray:
        return self._offsets

    @property
    def neighbor_array(self) -> np.ndarray:
        return self._neighbors

    def degrees(self) -> np.ndarray:
        return np.diff(self._offsets)

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def is_regular(self) -> bool:
        degrees = self.degrees()
        return bool(degrees.size) and bool(np.all(degrees == degrees[0]))

    # ── private reads (the query oracle goes through these) ────────────────────

    def _check_node(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise NodeIndexError(f"node {v} outside [0, {self.n})")
        return v

    def _degree(self, v: int) -> int:
        return int(self._offsets[v + 1] - self._offsets[v])

    def _row(self, v: int) -> np.ndarray:
        return self._neighbors[self._offsets[v]:self._offsets[v + 1]]

    # ── public reads ──────────────────────────────────────────────────────────

    def degree(self, v: int) -> int:
        return self._degree(self._check_node(v))

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted, read-only neighbor row of v."""
        return self._row(self._check_node(v))

    def has_edge(self, u: int, v: int) -> bool:
        row = self._row(self._check_node(u))
        v = self._check_node(v)
        i = int(np.searchsorted(row, v))
        return i < row.size and int(row[i]) == v

    def edges(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, sorted lexicographically."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        dst = self._neighbors.astype(np.int64)
        keep = src < dst
        return np.column_stack([src[keep], dst[keep]])

    def adjacency_matrix(self) -> sps.csr_matrix:
        data = np.ones(self._neighbors.size, dtype=np.float64)
        return sps.csr_matrix((data, self._neighbors, self._offsets), shape=(self.n, self.n))

    def fingerprint(self) -> str:
        """sha256 over the CSR arrays and the declared degree, equal iff byte-identical."""
        h = hashlib.sha256()
        h.update(self._offsets.tobytes())
        h.update(self._neighbors.tobytes())
        h.update(str(self._regular_degree).encode())
        return h.hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._regular_degree == other._regular_degree
            and np.array_equal(self._offsets, other._offsets)
            and np.array_equal(self._neighbors, other._neighbors)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, regular_degree={self._regular_degree})"


class MatchingGraph:
    """
    A graph of M_{n,d}: nd half-nodes (i, j), i a group in [0, n), j in [0, d), whose edges
    form a perfect matching. Half-node (i, j) has flat index i*d + j.
    """

    __slots__ = ("_n", "_d", "_partner")

    def __init__(self, n: int, d: int, partner: np.ndarray | Sequence[int]):
        if n < 1 or d < 1:
            raise ParameterError(f"matching model needs n >= 1 and d >= 1, got n={n}, d={d}")
        if (n * d) % 2:
            raise ParameterError(f"nd must be even, got n={n}, d={d}")
        partner = np.array(partner, dtype=np.int64, copy=True)
        idx = np.arange(n * d)
        if partner.shape != (n * d,):
            raise ParameterError(f"partner array must have length {n * d}")
        if partner.min() < 0 or partner.max() >= n * d:
            raise ParameterError("partner index outside the half-node range")
        if np.any(partner == idx) or np.any(partner[partner] != idx):
            raise ParameterError("partner array is not a fixed-point-free involution")
        self._n, self._d = int(n), int(d)
        self._partner = _frozen(partner)

    @classmethod
    def from_pairs(cls, n: int, d: int, pairs: Iterable[tuple[tuple[int, int], tuple[int, int]]]) -> "MatchingGraph":
        partner = np.full(n * d, -1, dtype=np.int64)
        for (a, ja), (b, jb) in pairs:
            x, y = a * d + ja, b * d + jb
            partner[x], partner[y] = y, x
        return cls(n, d, partner)

    @property
    def n(self) -> int:
        return self._n

    @property
    def d(self) -> int:
        return self._d

    @property
    def partner_array(self) -> np.ndarray:
        return self._partner

    def half_node(self, flat: int) -> tuple[int, int]:
        return divmod(int(flat), self._d)

    def partner(self, i: int, j: int) -> tuple[int, int]:
        return self.half_node(self._partner[i * self._d + j])

    def group_edges(self, i: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Matching edges incident to group i, each as ((i, j), partner)."""
        return [((i, j), self.partner(i, j)) for j in range(self._d)]

    def has_group_edge(self, a: int, b: int) -> bool:
        """True iff some matching edge joins a half-node of group a to one of group b."""
        partners = self._partner[a * self._d:(a + 1) * self._d] // self._d
        return bool(np.any(partners == b))

    def pairs(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Every matching edge once, smaller flat index first."""
        return [
            (self.half_node(x), self.half_node(int(y)))
            for x, y in enumerate(self._partner)
            if x < y
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatchingGraph):
            return NotImplemented
        return self._n == other._n and self._d == other._d and np.array_equal(self._partner, other._partner)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"MatchingGraph(n={self._n}, d={self._d})"


# ── results ──────────────────────────────────────────────────────────────────

class PathStatus(str, Enum):
    FOUND = "Found"
    NOT_FOUND = "NotFound"

class PathResult(BaseModel):
    """
    Outcome of one s-t search.
    - visited_count: distinct nodes that entered either search tree (or a walk)
    - expanded_count: nodes whose neighbors were actually queried
    - frontier_count: visited nodes never expanded
    """
    status: PathStatus
    path: list[int] = Field(default_factory=list)
    visited_count: int = 0
    query_count: int = 0
    meet_node: int | None = None
    expanded_count: int = 0
    frontier_count: int = 0
    walk_steps: int = 0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def length(self) -> int | None:
        return len(self.path) - 1 if self.path else None

    @property
    def found(self) -> bool:
        return self.status is PathStatus.FOUND

class QueryCounts(BaseModel):
    degree: int = 0
    neighbor: int = 0
    incidence: int = 0
    group_incidence: int = 0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total(self) -> int:
        return self.degree + self.neighbor + self.incidence + self.group_incidence
