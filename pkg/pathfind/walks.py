# uniform random walks and the BFS + Random Walks short-path search
from __future__ import annotations

import functools
import math

from pydantic import BaseModel, Field

from common.logger import logger
from core.errors import ParameterError
from generators.rng import Seed, make_rng, split_seed
from graph.model import PathResult, PathStatus
from graph.oracle import QueryOracle
from pathfind.bfs import bfs_ball, check_endpoints, tree_path

class WalkParams(BaseModel):
    """
    Parameters of BFS + Random Walks for an (n, d, lambda)-graph and failure probability delta:
      k         = ceil(sqrt(7 n ln(1/delta)))     BFS ball size around s
      walk_len  = ceil(3 lg_{d/lambda} n)         steps per walk
      num_walks = ceil(k / (3 lg_{d/lambda} n))   walks from t
    lambda is an input (spectral estimate or the 2 sqrt(d-1) proxy), never discovered online.
    """
    n: int = Field(ge=2)
    d: int = Field(ge=1)
    lambda_over_d: float = Field(gt=0.0, lt=1.0)
    delta: float = Field(gt=0.0, lt=1.0)
    k: int = Field(ge=1)
    walk_len: int = Field(ge=1)
    num_walks: int = Field(ge=1)

    @property
    def log_base(self) -> float:
        """lg_{d/lambda}(n) = ln n / ln(d/lambda)."""
        return math.log(self.n) / math.log(1.0 / self.lambda_over_d)

    @classmethod
    def from_spectrum(
        cls,
        n: int,
        d: int,
        lambda_: float,
        delta: float,
        *,
        enforce_hypothesis: bool = True,
    ) -> "WalkParams":
        """
        enforce_hypothesis rejects lambda/d > 1/2, where the success guarantee is not
        claimed; experiments may switch it off and measure anyway.
        """
        if not 0.0 < delta < 1.0:
            raise ParameterError(f"delta must lie in (0, 1), got {delta}")
        if not 0.0 < lambda_ < d:
            raise ParameterError(f"need 0 < lambda < d, got lambda={lambda_}, d={d}")
        ratio = lambda_ / d
        if ratio > 0.5:
            if enforce_hypothesis:
                logger.error(f"[walks] lambda/d={ratio:.4f} > 1/2")
                raise ParameterError(f"BFS + Random Walks needs lambda/d <= 1/2, got {ratio:.4f}")
            logger.warning(f"[walks] lambda/d={ratio:.4f} > 1/2, success guarantee does not apply")
        lg = math.log(n) / math.log(d / lambda_)
        k = math.ceil(math.sqrt(7 * n * math.log(1.0 / delta)))
        return cls(
            n=n,
            d=d,
            lambda_over_d=ratio,
            delta=delta,
            k=k,
            walk_len=max(1, math.ceil(3 * lg)),
            num_walks=max(1, math.ceil(k / (3 * lg))),
        )

def random_walk(oracle: QueryOracle, start: int, length: int, seed: Seed) -> list[int]:
    """
    length uniform steps from start via neighbor queries; length+1 nodes.
    Each step draws j uniformly from [0, deg) and asks for the j-th neighbor; on a
    d-regular graph deg is the public d, otherwise it costs a degree query.
    """
    if length < 0:
        raise ParameterError(f"walk length must be >= 0, got {length}")
    check_endpoints(oracle, start)
    rng = make_rng(seed)
    d = oracle.regular_degree
    walk = [int(start)]
    v = int(start)
    for _ in range(length):
        deg = d if d is not None else oracle.degree(v)
        if deg == 0:
            raise ParameterError(f"random walk stuck at isolated node {v}")
        v = oracle.neighbor(v, int(rng.integers(deg)))
        walk.append(v)
    return walk

def erase_loops(seq: list[int]) -> list[int]:
    """Chronological loop erasure: on a repeat, cut back to the first occurrence's prefix."""
    out: list[int] = []
    index: dict[int, int] = {}
    for x in seq:
        if x in index:
            cut = index[x]
            for y in out[cut + 1:]:
                del index[y]
            del out[cut + 1:]
        else:
            index[x] = len(out)
            out.append(x)
    return out

@functools.lru_cache(maxsize=256)
def warn_outside_guarantee(n: int, d: int, lambda_over_d: float) -> None:
    """Logged once per parameter set, not once per search."""
    logger.warning(f"[bfswalks] running with lambda/d={lambda_over_d:.4f} > 1/2 on (n={n}, d={d}), "
                   f"the 1 - delta success guarantee does not apply")

def bfs_plus_walks(oracle: QueryOracle, s: int, t: int, params: WalkParams, seed: Seed) -> PathResult:
    """
    Grows V_s by BFS from s to min(k, reachable) nodes, then runs up to num_walks independent
    walk_len-step walks from t. The first walk to touch V_s at w yields
    s -> ... -> w (BFS tree) followed by the walk back from w to t, loop-erased.
    A t already inside V_s short-circuits with the tree path. Regular graphs only.
    """
    if s == t:
        raise ParameterError(f"BFS + Random Walks needs s != t, got s = t = {s}")
    d = oracle.regular_degree
    if d is None:
        raise ParameterError("BFS + Random Walks needs a d-regular graph")
    if params.d != d or params.n != oracle.n:
        raise ParameterError(f"params built for (n={params.n}, d={params.d}) but graph is (n={oracle.n}, d={d})")
    if params.lambda_over_d > 0.5:
        warn_outside_guarantee(params.n, params.d, round(params.lambda_over_d, 6))
    check_endpoints(oracle, s, t)
    start_queries = oracle.query_count

    parent, expanded = bfs_ball(oracle, s, params.k)
    if t in parent:
        path = tree_path(parent, t)
        logger.debug(f"[bfswalks] t={t} inside the BFS ball of s={s}")
        return PathResult(
            status=PathStatus.FOUND,
            path=path,
            visited_count=len(parent),
            query_count=oracle.query_count - start_queries,
            expanded_count=expanded,
            frontier_count=len(parent) - expanded,
        )

    walked: set[int] = set()
    steps = 0
    for walk_seed in split_seed(seed, params.num_walks):
        rng = make_rng(walk_seed)
        walk = [t]
        v = t
        for _ in range(params.walk_len):
            v = oracle.neighbor(v, int(rng.integers(d)))
            walk.append(v)
            steps += 1
            if v in parent:
                break
        walked.update(walk)
        if v in parent:
            path = erase_loops(tree_path(parent, v) + walk[-2::-1])
            visited = len(parent) + len(walked - parent.keys())
            logger.debug(f"[bfswalks] s={s}, t={t}: hit at {v}, length={len(path) - 1}, steps={steps}")
            return PathResult(
                status=PathStatus.FOUND,
                path=path,
                visited_count=visited,
                query_count=oracle.query_count - start_queries,
                meet_node=v,
                expanded_count=expanded,
                frontier_count=visited - expanded,
                walk_steps=steps,
            )

    visited = len(parent) + len(walked - parent.keys())
    logger.debug(f"[bfswalks] s={s}, t={t}: all {params.num_walks} walks missed")
    return PathResult(
        status=PathStatus.NOT_FOUND,
        visited_count=visited,
        query_count=oracle.query_count - start_queries,
        expanded_count=expanded,
        frontier_count=visited - expanded,
        walk_steps=steps,
    )
