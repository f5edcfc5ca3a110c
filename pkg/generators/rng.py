# seeded random streams
# every generator is PCG64 (numpy), seeded from a 64-bit integer; replicate streams are
# split off with SeedSequence.spawn so trials never share state
from __future__ import annotations

import numpy as np

from core.errors import ParameterError

SEED_MAX = 2**64 - 1

Seed = int | np.random.SeedSequence

def check_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed <= SEED_MAX:
        raise ParameterError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed

def make_rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(check_seed(seed)))

def split_seed(seed: Seed, count: int) -> list[int]:
    """count independent 64-bit child seeds, stable for a given parent seed."""
    parent = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(check_seed(seed))
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in parent.spawn(count)]

def derive_seed(seed: int, *keys: int) -> int:
    """One child seed addressed by an integer path, e.g. (grid index, trial index)."""
    seq = np.random.SeedSequence(check_seed(seed), spawn_key=tuple(int(k) for k in keys))
    return int(seq.generate_state(1, dtype=np.uint64)[0])
