# script to measure how often random 3-regular graphs are near-Ramanujan
# NOTE: run from the repo root as `PYTHONPATH=. python scripts/near_ramanujan_survey.py`
import math
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from tqdm import tqdm

from generators.random_graphs import gen_random_regular
from generators.rng import split_seed
from spectral.estimators import lambda_exact, ramanujan_threshold

N = 2000
D = 3
GRAPHS = 50
SLACK = 0.1
REQUIRED_FRACTION = 0.9

def survey(n: int = N, d: int = D, graphs: int = GRAPHS, seed: int = 0) -> list[float]:
    """lambda_exact of `graphs` independent random d-regular graphs on n nodes."""
    lambdas = []
    for graph_seed in tqdm(split_seed(seed, graphs), desc=f"random {d}-regular n={n}"):
        lambdas.append(lambda_exact(gen_random_regular(n, d, graph_seed)).lambda_est)
    return lambdas

if __name__ == "__main__":
    lambdas = survey()
    limit = ramanujan_threshold(D) + SLACK
    fraction = sum(lam <= limit for lam in lambdas) / len(lambdas)
    print(f"lambda range [{min(lambdas):.4f}, {max(lambdas):.4f}], 2 sqrt(2) = {2 * math.sqrt(2):.4f}")
    print(f"{fraction:.2%} of graphs satisfy lambda <= 2 sqrt(2) + {SLACK}")

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ax.hist(lambdas, bins=20)
    ax.axvline(ramanujan_threshold(D), color="k", linestyle=":", label="2 sqrt(d-1)")
    ax.set_xlabel("lambda")
    ax.set_ylabel("graphs")
    ax.legend()
    fig.savefig("near_ramanujan_survey.png", dpi=150)

    sys.exit(0 if fraction >= REQUIRED_FRACTION else 1)
