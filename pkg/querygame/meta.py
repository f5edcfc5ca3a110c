# group contraction of matching-model graphs and exhaustive checks over all matchings
from __future__ import annotations

from collections import Counter
from collections.abc import Iterator, Sequence
from fractions import Fraction

import numpy as np
from pydantic import BaseModel

from core.errors import BudgetError, ParameterError
from generators.random_graphs import contract_pairs
from graph.model import Graph, MatchingGraph

# 11!! = 10395 matchings at 12 half-nodes; 15!! is already two million
MAX_ENUMERATED_HALF_NODES = 14

class Rejected(BaseModel):
    """Contraction produced a self-edge or a duplicate edge."""
    self_loops: int
    duplicates: int

    @property
    def reason(self) -> str:
        return f"{self.self_loops} self-edge(s), {self.duplicates} duplicate edge(s)"

def _contracted_edges(mg: MatchingGraph) -> np.ndarray:
    partner = mg.partner_array
    flat = np.arange(partner.size)
    keep = flat < partner
    return contract_pairs(np.column_stack([flat[keep], partner[keep]]), mg.d)

def contract_groups(mg: MatchingGraph) -> Graph | Rejected:
    """
    Replace every matching edge ((i, h), (j, k)) by (i, j). Returns the simple d-regular
    graph on the n groups, or Rejected when a self-edge or duplicate edge appears.
    """
    edges = _contracted_edges(mg)
    loops = int(np.count_nonzero(edges[:, 0] == edges[:, 1]))
    lo, hi = np.minimum(edges[:, 0], edges[:, 1]), np.maximum(edges[:, 0], edges[:, 1])
    proper = lo != hi
    duplicates = int(proper.sum() - np.unique(lo[proper] * mg.n + hi[proper]).size)
    if loops or duplicates:
        return Rejected(self_loops=loops, duplicates=duplicates)
    return Graph.from_edges(mg.n, edges, mg.d)

def enumerate_matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """Every perfect matching of `items` (even length), each as a list of pairs."""
    items = list(items)
    if len(items) % 2:
        raise ParameterError(f"perfect matching needs an even number of items, got {len(items)}")
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for idx, other in enumerate(rest):
        for tail in enumerate_matchings(rest[:idx] + rest[idx + 1:]):
            yield [(first, other), *tail]

def _check_enumerable(n: int, d: int) -> None:
    if n * d > MAX_ENUMERATED_HALF_NODES:
        raise BudgetError(f"exhaustive enumeration needs nd <= {MAX_ENUMERATED_HALF_NODES}, got {n * d}")
    if (n * d) % 2:
        raise ParameterError(f"nd must be even, got n={n}, d={d}")

def _as_matching(n: int, d: int, pairs: list[tuple[int, int]]) -> MatchingGraph:
    partner = np.empty(n * d, dtype=np.int64)
    for x, y in pairs:
        partner[x], partner[y] = y, x
    return MatchingGraph(n, d, partner)

def exact_contraction_acceptance(n: int, d: int) -> Fraction:
    """Exact fraction of all matchings on nd half-nodes whose contraction is simple."""
    _check_enumerable(n, d)
    total = accepted = 0
    for pairs in enumerate_matchings(range(n * d)):
        total += 1
        accepted += not isinstance(contract_groups(_as_matching(n, d, pairs)), Rejected)
    return Fraction(accepted, total)

def partner_distribution(
    n: int,
    d: int,
    revealed: Sequence[tuple[int, int]],
    half_node: int,
) -> dict[int, Fraction]:
    """
    Over all matchings containing the `revealed` pairs (flat half-node indices), the exact
    distribution of the partner of `half_node`, which must not be revealed itself.
    """
    _check_enumerable(n, d)
    fixed = {x for pair in revealed for x in pair}
    if half_node in fixed:
        raise ParameterError(f"half-node {half_node} is already matched by a revealed pair")
    if len(fixed) != 2 * len(revealed):
        raise ParameterError("revealed pairs overlap")
    free = [x for x in range(n * d) if x not in fixed]
    counts: Counter[int] = Counter()
    for pairs in enumerate_matchings(free):
        for x, y in pairs:
            if x == half_node:
                counts[y] += 1
            elif y == half_node:
                counts[x] += 1
    total = sum(counts.values())
    return {partner: Fraction(c, total) for partner, c in sorted(counts.items())}
