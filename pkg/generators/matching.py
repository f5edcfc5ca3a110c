# the matching model M_{n,d}: a uniform perfect matching on nd half-nodes grouped d at a time
from __future__ import annotations

import numpy as np

from common.logger import logger
from core.errors import ParameterError
from generators.rng import Seed, make_rng
from graph.model import MatchingGraph

def random_half_edge_pairs(n: int, d: int, rng: np.random.Generator) -> np.ndarray:
    """
    Uniform perfect matching on the flat half-node indices 0..nd-1, as an (nd/2, 2) array.
    Pairing consecutive entries of a uniform permutation is uniform over matchings.
    """
    return rng.permutation(n * d).reshape(-1, 2)

def gen_matching_model(n: int, d: int, seed: Seed) -> MatchingGraph:
    if n < 1 or d < 1:
        raise ParameterError(f"matching model needs n >= 1 and d >= 1, got n={n}, d={d}")
    if (n * d) % 2:
        logger.error(f"[gen/matching] nd must be even, got n={n}, d={d}")
        raise ParameterError(f"nd must be even, got n={n}, d={d}")
    pairs = random_half_edge_pairs(n, d, make_rng(seed))
    partner = np.empty(n * d, dtype=np.int64)
    partner[pairs[:, 0]] = pairs[:, 1]
    partner[pairs[:, 1]] = pairs[:, 0]
    return MatchingGraph(n, d, partner)
