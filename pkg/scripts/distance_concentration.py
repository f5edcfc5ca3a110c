# script to check that distances in random 3-regular graphs concentrate around lg_2 n
# NOTE: run from the repo root as `PYTHONPATH=. python scripts/distance_concentration.py`
import sys

from tqdm import tqdm

from bounds.exact import ramanujan_concentration_check
from bounds.formulas import distance_window
from generators.random_graphs import gen_random_regular
from generators.rng import derive_seed

N = 2**16
D = 3
GRAPHS = 10
MAX_FRACTION = 0.10

if __name__ == "__main__":
    center, slack = distance_window(N, D)
    print(f"window {center:.2f} +- {slack:.2f}")
    fractions = []
    for i in tqdm(range(GRAPHS), desc=f"random {D}-regular n={N}"):
        graph = gen_random_regular(N, D, derive_seed(0, i))
        fractions.append(ramanujan_concentration_check(graph, s=0))
    worst = max(fractions)
    print(f"fraction of nodes outside the window: max {worst:.4f}, per graph {[round(f, 4) for f in fractions]}")
    sys.exit(0 if worst <= MAX_FRACTION else 1)
