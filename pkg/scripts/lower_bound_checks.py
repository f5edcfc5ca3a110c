# script for the lower-bound consistency runs and the exhaustive matching-model checks
# NOTE: run from the repo root as `PYTHONPATH=. python scripts/lower_bound_checks.py`
import math
import sys
from fractions import Fraction

from tqdm import tqdm

from querygame.game import success_vs_budget
from querygame.meta import exact_contraction_acceptance, partner_distribution
from querygame.models import ErdosRenyiModel, RandomRegularModel
from querygame.strategies import BidirectionalBFS, DegreeGreedy, GuessDirectEdge, RandomQuery

TRIALS = 200
MAX_CONNECTED_RATE = 0.2

def connected_rates() -> int:
    bad = 0
    for n in tqdm((2**14, 2**16), desc="n"):
        budget = math.isqrt(n) // 4
        for strategy in (BidirectionalBFS(), RandomQuery(), DegreeGreedy()):
            table = success_vs_budget(strategy, RandomRegularModel(n=n, d=3), [budget], TRIALS, seed=n)
            rate = float(table["connected_rate"].iloc[0])
            print(f"n={n} {strategy.name} budget={budget}: connected rate {rate:.3f}")
            bad += rate > MAX_CONNECTED_RATE
    return bad

def direct_guess() -> int:
    n = 10**4
    p = 2 * math.log(n) / n
    table = success_vs_budget(GuessDirectEdge(), ErdosRenyiModel(n=n, p=p), [0], 10**4, seed=7)
    rate = float(table["success_rate"].iloc[0])
    print(f"guess-direct-edge on ER(n={n}, p={p:.5f}): success {rate:.5f}, 2p = {2 * p:.5f}")
    return int(rate > 2 * p)

def matching_checks() -> int:
    bad = 0
    # partner of half-node 0 with one revealed pair, nd = 10
    dist = partner_distribution(5, 2, [(2, 7)], 0)
    expected = Fraction(1, 7)
    if set(dist.values()) != {expected} or len(dist) != 7:
        print(f"conditional partner distribution not uniform: {dist}")
        bad += 1
    exact = exact_contraction_acceptance(4, 3)
    print(f"n=4, d=3 contraction acceptance {exact} = {float(exact):.5f}")
    return bad

if __name__ == "__main__":
    failures = connected_rates() + direct_guess() + matching_checks()
    sys.exit(0 if failures == 0 else 1)
