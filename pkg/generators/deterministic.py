# deterministic constructions: the Margulis torus expander and small known-spectrum fixtures
from __future__ import annotations

import numpy as np

from common.logger import logger
from core.errors import ParameterError
from graph.model import Graph

def gen_margulis_expander(m: int) -> Graph:
    """
    Margulis-style expander on the m x m torus: (x, y) joins
    (x +- 2y, y), (x +- (2y+1), y), (x, y +- 2x), (x, y +- (2x+1)), all mod m.
    The 8-regular multigraph is collapsed to a simple graph: loops dropped, parallel
    edges merged. regular_degree stays 8 only if nothing was merged.
    """
    if m < 3:
        raise ParameterError(f"Margulis construction needs m >= 3, got {m}")
    x, y = np.divmod(np.arange(m * m, dtype=np.int64), m)
    images = [
        ((x + 2 * y) % m, y),
        ((x - 2 * y) % m, y),
        ((x + 2 * y + 1) % m, y),
        ((x - 2 * y - 1) % m, y),
        (x, (y + 2 * x) % m),
        (x, (y - 2 * x) % m),
        (x, (y + 2 * x + 1) % m),
        (x, (y - 2 * x - 1) % m),
    ]
    src = x * m + y
    edges = np.concatenate([np.column_stack([src, ix * m + iy]) for ix, iy in images])
    graph = Graph.from_edges(m * m, edges)
    if graph.is_regular() and graph.max_degree() == 8:
        graph = Graph(graph.offsets, graph.neighbor_array, 8)
    else:
        logger.info(f"[gen/margulis] m={m}: loops/parallel edges merged, degrees in "
                    f"[{int(graph.degrees().min())}, {graph.max_degree()}]")
    return graph

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    v = np.arange(n, dtype=np.int64)
    return Graph.from_edges(n, np.column_stack([v, (v + 1) % n]), 2)

def complete_graph(n: int) -> Graph:
    if n < 2:
        raise ParameterError(f"complete graph needs n >= 2, got {n}")
    u, v = np.triu_indices(n, k=1)
    return Graph.from_edges(n, np.column_stack([u, v]), n - 1)

def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at node 0."""
    if leaves < 1:
        raise ParameterError(f"star needs at least one leaf, got {leaves}")
    leaf = np.arange(1, leaves + 1, dtype=np.int64)
    return Graph.from_edges(leaves + 1, np.column_stack([np.zeros_like(leaf), leaf]))

def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    i = np.arange(5, dtype=np.int64)
    outer = np.column_stack([i, (i + 1) % 5])
    inner = np.column_stack([i + 5, (i + 2) % 5 + 5])
    spokes = np.column_stack([i, i + 5])
    return Graph.from_edges(10, np.concatenate([outer, inner, spokes]), 3)
