# script to check bidirectional BFS against full BFS distances on many graphs
# NOTE: run from the repo root as `PYTHONPATH=. python scripts/path_exactness.py`
import math
import sys

from tqdm import tqdm

from bench.experiments import sample_pairs
from generators.deterministic import gen_margulis_expander
from generators.random_graphs import gen_erdos_renyi, gen_random_regular
from generators.rng import derive_seed
from graph.oracle import QueryOracle
from pathfind.bfs import UNREACHABLE, full_bfs
from pathfind.bidirectional import bidirectional_bfs

PAIRS = 100
SIZES = [200, 500, 1000, 2000]

def graph_grid():
    """(label, graph) for ER at two densities, random d-regular and Margulis."""
    for i, n in enumerate(SIZES):
        for rep in range(10):
            seed = derive_seed(1, i, rep)
            yield f"er-log n={n}", gen_erdos_renyi(n, 2 * math.log(n) / n, seed)
            yield f"er-0.01 n={n}", gen_erdos_renyi(n, 0.01, seed)
            for d in (3, 4, 8):
                yield f"regular d={d} n={n}", gen_random_regular(n, d, seed)
    for m in range(10, 45, 3):
        yield f"margulis m={m}", gen_margulis_expander(m)

def check(graph, seed: int) -> int:
    """Number of pairs where bidirectional BFS disagrees with full BFS."""
    mismatches = 0
    for s, t in sample_pairs(graph.n, PAIRS, seed):
        dist = full_bfs(QueryOracle(graph, record_visits=False), s)
        result = bidirectional_bfs(QueryOracle(graph, record_visits=False), s, t)
        if result.found:
            mismatches += result.length != dist[t]
        else:
            mismatches += dist[t] != UNREACHABLE
    return mismatches

if __name__ == "__main__":
    total = graphs = 0
    for idx, (label, graph) in enumerate(tqdm(list(graph_grid()), desc="graphs")):
        bad = check(graph, derive_seed(2, idx))
        graphs += 1
        if bad:
            print(f"{label}: {bad} mismatching pair(s)")
        total += bad
    print(f"{graphs} graphs x {PAIRS} pairs, {total} mismatches")
    sys.exit(0 if total == 0 else 1)
