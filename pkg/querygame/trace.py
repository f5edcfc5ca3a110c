# query traces and their connected / useless classification
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Literal

from pydantic import BaseModel
from scipy.cluster.hierarchy import DisjointSet

TraceKind = Literal["node", "group"]

def _normalize(edge: tuple) -> tuple:
    a, b = edge
    return (a, b) if a <= b else (b, a)

def _endpoint_id(x: Hashable) -> int:
    # group traces carry half-nodes (group, slot); connectivity is over groups
    return x[0] if isinstance(x, tuple) else x

@dataclass(frozen=True)
class TraceStep:
    query: int
    edges: frozenset

@dataclass
class Trace:
    """
    The ordered record of one query game: the queried node (or group) of every step and
    the edges returned for it. Edges are stored with endpoints in sorted order, so
    (u, v) and (v, u) are one discovered edge.
    """
    s: int
    t: int
    n: int
    kind: TraceKind = "node"
    steps: list[TraceStep] = field(default_factory=list, init=False)
    _discovered: set = field(default_factory=set, init=False, repr=False)
    _queried: set[int] = field(default_factory=set, init=False, repr=False)

    def record(self, query: int, returned: frozenset | set) -> TraceStep:
        step = TraceStep(int(query), frozenset(_normalize(e) for e in returned))
        self.steps.append(step)
        self._discovered |= step.edges
        self._queried.add(step.query)
        return step

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def queries(self) -> list[int]:
        return [step.query for step in self.steps]

    @property
    def queried(self) -> frozenset[int]:
        return frozenset(self._queried)

    @property
    def discovered_edges(self) -> frozenset:
        return frozenset(self._discovered)

    def was_queried(self, v: int) -> bool:
        return v in self._queried

    def prefix(self, k: int) -> "Trace":
        """The trace after its first k steps."""
        out = Trace(self.s, self.t, self.n, self.kind)
        for step in self.steps[:k]:
            out.record(step.query, step.edges)
        return out

    def contracted(self) -> "Trace":
        """A group trace seen as a node trace on groups; group self-loops are dropped."""
        if self.kind == "node":
            return self
        out = Trace(self.s, self.t, self.n, "node")
        for step in self.steps:
            edges = {(a[0], b[0]) for a, b in step.edges if a[0] != b[0]}
            out.record(step.query, edges)
        return out

    def adjacency(self) -> dict[int, set[int]]:
        """Adjacency of the discovered edges (over groups for a group trace)."""
        adj: dict[int, set[int]] = {}
        for a, b in self._discovered:
            u, v = _endpoint_id(a), _endpoint_id(b)
            if u == v:
                continue
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return adj

    def discovered_path(self) -> list[int]:
        """Shortest s-t path over discovered edges, or [] when they do not connect s and t."""
        if self.s == self.t:
            return [self.s]
        adj = self.adjacency()
        parent = {self.s: self.s}
        queue = deque([self.s])
        while queue:
            u = queue.popleft()
            for v in sorted(adj.get(u, ())):
                if v in parent:
                    continue
                parent[v] = u
                if v == self.t:
                    path = [v]
                    while path[-1] != self.s:
                        path.append(parent[path[-1]])
                    return path[::-1]
                queue.append(v)
        return []

class TraceClass(BaseModel):
    k: int
    connected: bool
    useless: bool
    edges: int

def classify_trace(
    trace: Trace,
    s: int | None = None,
    t: int | None = None,
    p: float | None = None,
    n: int | None = None,
) -> list[TraceClass]:
    """
    Per-step classification for k = 0..len(trace).
    - connected: s and t are joined by discovered edges after k steps
    - useless (only when an ER edge probability p is given): disconnected and at most
      2pnk edges discovered; the empty trace is useless
    """
    s = trace.s if s is None else s
    t = trace.t if t is None else t
    n = trace.n if n is None else n
    components = DisjointSet([s, t])
    seen: set = set()
    connected = s == t
    out = [TraceClass(k=0, connected=connected, useless=p is not None and not connected, edges=0)]
    for k, step in enumerate(trace.steps, start=1):
        for edge in step.edges:
            if edge in seen:
                continue
            seen.add(edge)
            u, v = _endpoint_id(edge[0]), _endpoint_id(edge[1])
            for x in (u, v):
                if x not in components:
                    components.add(x)
            components.merge(u, v)
        connected = connected or components.connected(s, t)
        useless = p is not None and not connected and len(seen) <= 2 * p * n * k
        out.append(TraceClass(k=k, connected=connected, useless=useless, edges=len(seen)))
    return out

def steps_to_connect(trace: Trace) -> int | None:
    """First step after which the trace is connected, None if it never is."""
    for cls in classify_trace(trace):
        if cls.connected:
            return cls.k
    return None
