# query strategies: a strategy sees only the trace (and its own seed), names the next
# node or group to query, and finally answers with a path
from __future__ import annotations

import heapq
from abc import ABC, abstractmethod
from collections import deque
from typing import ClassVar

from core.errors import StrategyError
from generators.rng import Seed, make_rng
from querygame.trace import Trace, TraceKind

class Strategy(ABC):
    """
    Lifecycle: start(s, t, n, seed) once per game, then next_query(trace) until it returns
    None or the budget runs out, then answer(trace).
    next_query may keep state, but only state rebuilt from trace steps and the seed, so
    two runs with the same seed on the same graph issue the same queries.
    answer must be a pure function of the trace.
    """
    name: ClassVar[str]
    kind: ClassVar[TraceKind] = "node"

    def __init__(self) -> None:
        self.s = self.t = self.n = 0
        self.seed: Seed = 0

    def start(self, s: int, t: int, n: int, seed: Seed = 0) -> None:
        self.s, self.t, self.n, self.seed = s, t, n, seed
        self._reset()

    def _reset(self) -> None:
        pass

    @abstractmethod
    def next_query(self, trace: Trace) -> int | None: ...

    def answer(self, trace: Trace) -> list[int]:
        """Shortest s-t path through discovered edges, [] if none."""
        return trace.discovered_path()

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

class BidirectionalBFS(Strategy):
    """
    Two BFS trees grown from s and t, one query each in turn. Every discovered node is
    owned by the tree that saw it first; the game stops once a tree discovers a node owned
    by the other one.
    """
    name = "bibfs"

    def _reset(self) -> None:
        self._queues: tuple[deque[int], deque[int]] = (deque([self.s]), deque([self.t]))
        self._owner: dict[int, int] = {self.s: 0, self.t: 1}
        self._cursor = 0
        self._turn = 0
        self._met = self.s == self.t

    def _absorb(self, trace: Trace) -> None:
        for step in trace.steps[self._cursor:]:
            side = self._owner.get(step.query, 0)
            for a, b in step.edges:
                u = b if a == step.query else a
                owner = self._owner.get(u)
                if owner is None:
                    self._owner[u] = side
                    self._queues[side].append(u)
                elif owner != side:
                    self._met = True
        self._cursor = len(trace.steps)

    def _pop(self, side: int, trace: Trace) -> int | None:
        queue = self._queues[side]
        while queue:
            v = queue.popleft()
            if not trace.was_queried(v):
                return v
        return None

    def next_query(self, trace: Trace) -> int | None:
        self._absorb(trace)
        if self._met:
            return None
        for _ in range(2):
            side, self._turn = self._turn, self._turn ^ 1
            v = self._pop(side, trace)
            if v is not None:
                return v
        return None

class RandomQuery(Strategy):
    """Queries s, then t, then uniformly random nodes not yet queried."""
    name = "random"

    def _reset(self) -> None:
        self._rng = make_rng(self.seed)
        self._opening = deque(dict.fromkeys([self.s, self.t]))

    def next_query(self, trace: Trace) -> int | None:
        while self._opening:
            v = self._opening.popleft()
            if not trace.was_queried(v):
                return v
        if len(trace.queried) >= self.n:
            return None
        while True:
            v = int(self._rng.integers(self.n))
            if not trace.was_queried(v):
                return v

class DegreeGreedy(Strategy):
    """
    Queries s and t first, then always the unqueried node with the most discovered incident
    edges (smallest id on ties); falls back to a random unqueried node when no discovered
    node is left.
    """
    name = "greedy"

    def _reset(self) -> None:
        self._rng = make_rng(self.seed)
        self._opening = deque(dict.fromkeys([self.s, self.t]))
        self._score: dict[int, int] = {}
        self._heap: list[tuple[int, int]] = []
        self._cursor = 0

    def _absorb(self, trace: Trace) -> None:
        for step in trace.steps[self._cursor:]:
            for a, b in step.edges:
                u = b if a == step.query else a
                if trace.was_queried(u):
                    continue
                score = self._score.get(u, 0) + 1
                self._score[u] = score
                heapq.heappush(self._heap, (-score, u))
        self._cursor = len(trace.steps)

    def next_query(self, trace: Trace) -> int | None:
        self._absorb(trace)
        while self._opening:
            v = self._opening.popleft()
            if not trace.was_queried(v):
                return v
        while self._heap:
            neg_score, v = heapq.heappop(self._heap)
            # lazy deletion: skip stale heap entries
            if not trace.was_queried(v) and self._score.get(v) == -neg_score:
                return v
        if len(trace.queried) >= self.n:
            return None
        while True:
            v = int(self._rng.integers(self.n))
            if not trace.was_queried(v):
                return v

class GuessDirectEdge(Strategy):
    """Makes no query and reports the direct path [s, t]."""
    name = "guess"

    def next_query(self, trace: Trace) -> int | None:
        return None

    def answer(self, trace: Trace) -> list[int]:
        return [trace.s] if trace.s == trace.t else [trace.s, trace.t]

class ScriptedStrategy(Strategy):
    """Issues a fixed list of queries, in order."""
    name = "scripted"

    def __init__(self, queries: list[int] | None = None):
        super().__init__()
        self.queries = list(queries or [])

    def next_query(self, trace: Trace) -> int | None:
        k = len(trace)
        return self.queries[k] if k < len(self.queries) else None

class ContractingStrategy(Strategy):
    """
    Plays a node strategy in the matching model: group i stands for node i, and a group
    query is shown to the inner strategy as a node query returning the contracted edges.
    With abort_on_collision the game ends, answering nothing, as soon as contraction
    reveals a self-edge or a duplicate edge, since the hidden graph is then not simple.
    """
    name = "contract"
    kind = "group"

    def __init__(self, inner: Strategy | None = None, *, abort_on_collision: bool = True):
        super().__init__()
        self.inner = inner or BidirectionalBFS()
        self.abort_on_collision = abort_on_collision
        if self.inner.kind != "node":
            raise StrategyError(f"contracting needs a node strategy, got {self.inner.name}")

    def _reset(self) -> None:
        self.inner.start(self.s, self.t, self.n, self.seed)
        self._view = Trace(self.s, self.t, self.n, "node")
        self._witness: dict[tuple[int, int], tuple] = {}
        self._aborted = False

    def _collides(self, edges: frozenset) -> bool:
        for half_edge in edges:
            a, b = half_edge[0][0], half_edge[1][0]
            if a == b:
                return True
            key = (a, b) if a < b else (b, a)
            if self._witness.setdefault(key, half_edge) != half_edge:
                return True
        return False

    def next_query(self, trace: Trace) -> int | None:
        for step in trace.steps[len(self._view):]:
            if self.abort_on_collision and self._collides(step.edges):
                self._aborted = True
            self._view.record(step.query, {(a[0], b[0]) for a, b in step.edges if a[0] != b[0]})
        if self._aborted:
            return None
        return self.inner.next_query(self._view)

    def answer(self, trace: Trace) -> list[int]:
        if self.abort_on_collision and _has_collision(trace):
            return []
        return self.inner.answer(trace.contracted())

    def __repr__(self) -> str:
        return f"ContractingStrategy({self.inner!r})"

def _has_collision(trace: Trace) -> bool:
    witness: dict[tuple[int, int], tuple] = {}
    for a, b in trace.discovered_edges:
        if a[0] == b[0]:
            return True
        key = (min(a[0], b[0]), max(a[0], b[0]))
        if witness.setdefault(key, (a, b)) != (a, b):
            return True
    return False

class GroupBFS(ContractingStrategy):
    """Bidirectional BFS over groups."""
    name = "group-bfs"

    def __init__(self) -> None:
        super().__init__(BidirectionalBFS(), abort_on_collision=False)

STRATEGIES: dict[str, type[Strategy]] = {
    cls.name: cls for cls in (BidirectionalBFS, RandomQuery, DegreeGreedy, GuessDirectEdge, GroupBFS)
}

def get_strategy(name: str) -> Strategy:
    try:
        return STRATEGIES[name]()
    except KeyError:
        raise StrategyError(f"unknown strategy {name!r}, choose from {sorted(STRATEGIES)}") from None
