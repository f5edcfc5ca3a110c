# seeded random graph models: Erdos-Renyi G(n, p) and uniform random d-regular graphs
from __future__ import annotations

import math
from typing import Literal

import numpy as np

from common.logger import logger
from core.config import get_settings
from core.errors import GenerationError, ParameterError
from generators.matching import random_half_edge_pairs
from generators.rng import Seed, make_rng
from graph.model import Graph

RegularMethod = Literal["configuration", "pairing", "auto"]

# below this asymptotic acceptance rate "auto" stops rejecting whole pairings
_AUTO_MIN_ACCEPTANCE = 0.01

def _pair_index_to_edges(idx: np.ndarray) -> np.ndarray:
    """
    Maps linear indices over the pairs (j, i), j < i, ordered by i then j
    (idx = i(i-1)/2 + j), back to (j, i) rows.
    """
    i = np.floor((1.0 + np.sqrt(1.0 + 8.0 * idx.astype(np.float64))) / 2.0).astype(np.int64)
    # float sqrt can be off by one for large indices
    i -= (i * (i - 1) // 2 > idx).astype(np.int64)
    i += ((i + 1) * i // 2 <= idx).astype(np.int64)
    j = idx - i * (i - 1) // 2
    return np.column_stack([j, i])

def gen_erdos_renyi(n: int, p: float, seed: Seed) -> Graph:
    """
    G(n, p) by geometric skipping: gaps between consecutive present pairs are Geometric(p),
    so generation costs O(m) rather than C(n, 2) coin flips.
    """
    if n < 2:
        raise ParameterError(f"G(n, p) needs n >= 2, got {n}")
    if not 0.0 < p < 1.0:
        logger.error(f"[gen/er] p must lie in (0, 1), got {p}")
        raise ParameterError(f"p must lie in (0, 1), got {p}")

    rng = make_rng(seed)
    total = n * (n - 1) // 2
    chunks: list[np.ndarray] = []
    pos = -1
    while True:
        remaining = total - pos
        size = int(min(remaining, remaining * p * 1.1 + 64))
        idx = pos + np.cumsum(rng.geometric(p, size=size))
        if idx[-1] >= total:
            chunks.append(idx[idx < total])
            break
        chunks.append(idx)
        pos = int(idx[-1])
    idx = np.concatenate(chunks)
    graph = Graph.from_edges(n, _pair_index_to_edges(idx))
    logger.info(f"[gen/er] n={n}, p={p}, m={graph.m}")
    return graph

def contract_pairs(pairs: np.ndarray, d: int) -> np.ndarray:
    """Half-node pairs -> group edges (x // d, y // d); loops and repeats are kept."""
    return pairs // d

def is_simple_edge_set(edges: np.ndarray, n: int) -> bool:
    if np.any(edges[:, 0] == edges[:, 1]):
        return False
    lo, hi = np.minimum(edges[:, 0], edges[:, 1]), np.maximum(edges[:, 0], edges[:, 1])
    return np.unique(lo * n + hi).size == edges.shape[0]

def configuration_attempt(n: int, d: int, rng: np.random.Generator) -> np.ndarray:
    """One raw configuration-model pairing contracted to group edges (may be a multigraph)."""
    return contract_pairs(random_half_edge_pairs(n, d, rng), d)

def measure_acceptance_rate(n: int, d: int, attempts: int, seed: Seed) -> float:
    """Fraction of raw configuration-model pairings that contract to a simple graph."""
    _check_regular_params(n, d)
    rng = make_rng(seed)
    accepted = sum(is_simple_edge_set(configuration_attempt(n, d, rng), n) for _ in range(attempts))
    return accepted / attempts

def _check_regular_params(n: int, d: int) -> None:
    if d < 1 or n <= d:
        raise ParameterError(f"random regular graph needs 1 <= d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise ParameterError(f"nd must be even, got n={n}, d={d}")

def _configuration(n: int, d: int, rng: np.random.Generator, cap: int) -> Graph:
    for attempt in range(1, cap + 1):
        edges = configuration_attempt(n, d, rng)
        if is_simple_edge_set(edges, n):
            logger.info(f"[gen/regular] configuration model accepted n={n}, d={d} after {attempt} attempt(s)")
            return Graph.from_edges(n, edges, d)
    logger.error(f"[gen/regular] no simple pairing for n={n}, d={d} within {cap} attempts")
    raise GenerationError(f"configuration model exceeded {cap} attempts for n={n}, d={d}")

def _pairing(n: int, d: int, rng: np.random.Generator, cap: int) -> Graph:
    """
    Pairs all stubs, keeps the pairs that are new simple edges and re-pairs only the
    leftover stubs; restarts when the leftovers can no longer be paired.
    """

    def _suitable(edges: set[int], leftover: np.ndarray) -> bool:
        nodes = np.unique(leftover)
        for a_pos, a in enumerate(nodes):
            for b in nodes[a_pos + 1:]:
                if int(a) * n + int(b) not in edges:
                    return True
        return False

    for restart in range(1, cap + 1):
        edges: set[int] = set()
        stubs = np.repeat(np.arange(n, dtype=np.int64), d)
        while stubs.size:
            pairs = rng.permutation(stubs).reshape(-1, 2)
            lo, hi = np.minimum(pairs[:, 0], pairs[:, 1]), np.maximum(pairs[:, 0], pairs[:, 1])
            leftover: list[int] = []
            for a, b in zip(lo.tolist(), hi.tolist()):
                code = a * n + b
                if a != b and code not in edges:
                    edges.add(code)
                else:
                    leftover.extend((a, b))
            stubs = np.array(leftover, dtype=np.int64)
            if stubs.size and not _suitable(edges, stubs):
                break
        if not stubs.size:
            codes = np.fromiter(edges, dtype=np.int64, count=len(edges))
            logger.info(f"[gen/regular] pairing accepted n={n}, d={d} after {restart} restart(s)")
            return Graph.from_edges(n, np.column_stack([codes // n, codes % n]), d)
    logger.error(f"[gen/regular] pairing failed for n={n}, d={d} within {cap} restarts")
    raise GenerationError(f"pairing exceeded {cap} restarts for n={n}, d={d}")

def gen_random_regular(
    n: int,
    d: int,
    seed: Seed,
    method: RegularMethod = "auto",
    max_attempts: int | None = None,
) -> Graph:
    """
    Random simple d-regular graph on n nodes.
    - configuration: uniform perfect matching on nd half-nodes, contract groups, reject the
      whole pairing on any loop or parallel edge (exactly uniform over simple d-regular graphs)
    - pairing: re-pairs only the offending stubs (approximately uniform, practical for large d)
    - auto: configuration while exp(-(d^2-1)/4) >= 0.01, pairing beyond
    """
    _check_regular_params(n, d)
    cap = max_attempts or get_settings().XP_REJECTION_CAP
    rng = make_rng(seed)
    if method == "auto":
        method = "configuration" if math.exp(-(d * d - 1) / 4) >= _AUTO_MIN_ACCEPTANCE else "pairing"
    if method == "configuration":
        return _configuration(n, d, rng, cap)
    if method == "pairing":
        return _pairing(n, d, rng, cap)
    raise ParameterError(f"unknown random-regular method {method!r}")
