# estimate lambda = max_{i != 1} |lambda_i| of the adjacency matrix
# - exact: dense symmetric eigensolve (small n)
# - power: shifted block power iteration deflated against the all-ones eigenvector
from __future__ import annotations

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel
from scipy.sparse.csgraph import connected_components

from common.logger import logger
from common.timer import timed
from core.config import get_settings
from core.errors import BudgetError, ConvergenceError, ParameterError
from generators.rng import make_rng
from graph.model import Graph

# vectors iterated together; the top Ritz value converges at the gap to the
# block's last eigenvalue, not the gap between lambda_2 and lambda_3
POWER_BLOCK = 8

class SpectralReport(BaseModel):
    n: int
    d: int | None
    lambda_est: float
    lambda_2: float
    lambda_min: float
    method: Literal["exact", "power-iteration"]
    iterations: int
    residual: float
    is_ramanujan: bool
    is_expander: bool
    ratio: float | None = None
    ones_overlap: float = 0.0

def ramanujan_threshold(d: int) -> float:
    return 2.0 * math.sqrt(d - 1)

def _regular_degree(graph: Graph) -> int | None:
    if graph.regular_degree is not None:
        return graph.regular_degree
    return int(graph.degrees()[0]) if graph.is_regular() else None

def _classify(
    graph: Graph,
    lam2: float,
    lam_min: float,
    method: str,
    iterations: int,
    residual: float,
    ones_overlap: float = 0.0,
) -> SpectralReport:
    tol = get_settings().XP_RAMANUJAN_TOL
    lam = max(lam2, abs(lam_min))
    d = _regular_degree(graph)
    return SpectralReport(
        n=graph.n,
        d=d,
        lambda_est=lam,
        lambda_2=lam2,
        lambda_min=lam_min,
        method=method,  # type: ignore[arg-type]
        iterations=iterations,
        residual=residual,
        is_ramanujan=d is not None and d >= 1 and lam <= ramanujan_threshold(d) + tol,
        is_expander=d is not None and lam < d - tol,
        ratio=lam / d if d else None,
        ones_overlap=ones_overlap,
    )

@timed("lambda_exact")
def lambda_exact(graph: Graph, max_n: int | None = None) -> SpectralReport:
    """
    Full symmetric eigendecomposition of the dense adjacency matrix.
    lambda = max(lambda_2, |lambda_n|). For graphs that are not regular the value is
    informational only (lambda_1 is then not d and no ratio is reported).
    """
    budget = max_n or get_settings().XP_DENSE_EIG_MAX_N
    if graph.n > budget:
        logger.error(f"[spectral/exact] n={graph.n} exceeds dense budget {budget}")
        raise BudgetError(f"dense eigensolve budget is n <= {budget}, got n={graph.n}")
    if graph.n < 2:
        raise ParameterError("spectral report needs at least two nodes")
    eig = np.linalg.eigvalsh(graph.adjacency_matrix().toarray())  # ascending
    report = _classify(graph, float(eig[-2]), float(eig[0]), "exact", 0, 0.0)
    logger.info(f"[spectral/exact] n={graph.n}, lambda={report.lambda_est:.6f}, ramanujan={report.is_ramanujan}")
    return report

def _shifted_power(
    matvec,
    n: int,
    rng: np.random.Generator,
    tol_abs: float,
    max_iter: int,
) -> tuple[float, np.ndarray, int, float, bool]:
    """
    Block power iteration on a PSD-shifted operator restricted to the complement of 1,
    with a Rayleigh-Ritz step on the block each iteration.
    Stops when the top Rayleigh quotient moves by at most tol_abs between iterations; the
    residual ||Bv - theta v|| of the top Ritz vector is reported, not tested.
    Returns (theta, v, iterations, residual, converged).
    """
    ones = np.full(n, 1.0 / math.sqrt(n))
    block = max(1, min(POWER_BLOCK, n - 1))
    V = rng.standard_normal((n, block))
    V -= np.outer(ones, ones @ V)
    V, _ = np.linalg.qr(V)
    theta, v, residual = 0.0, V[:, 0], math.inf
    previous = -math.inf
    for it in range(1, max_iter + 1):
        W = matvec(V)
        W -= np.outer(ones, ones @ W)
        H = V.T @ W
        ritz, coords = np.linalg.eigh((H + H.T) / 2.0)  # ascending
        theta = float(ritz[-1])
        v = V @ coords[:, -1]
        v -= (v @ ones) * ones
        residual = float(np.linalg.norm(W @ coords[:, -1] - theta * v))
        if abs(theta - previous) <= tol_abs:
            return theta, v, it, residual, True
        previous = theta
        V, _ = np.linalg.qr(W)
    return theta, v, max_iter, residual, False

@timed("lambda_power")
def lambda_power(
    graph: Graph,
    tol: float | None = None,
    max_iter: int | None = None,
    seed: int | None = None,
) -> SpectralReport:
    """
    lambda_2 from power iteration on A + dI, lambda_n from power iteration on dI - A, both
    deflated against the all-ones eigenvector so neither run can lock onto lambda_1 = d.
    Each run stops once its Rayleigh quotient changes by at most tol * d in one iteration.
    Raises ConvergenceError (carrying the best estimate) when max_iter runs out.
    """
    settings = get_settings()
    d = _regular_degree(graph)
    if d is None:
        raise ParameterError("power iteration needs a d-regular graph")
    n_comp, _ = connected_components(graph.adjacency_matrix(), directed=False)
    if n_comp != 1:
        raise ParameterError(f"power iteration needs a connected graph, found {n_comp} components")
    n = graph.n
    tol = tol if tol is not None else settings.XP_POWER_TOL
    max_iter = max_iter or max(1, math.ceil(10 * math.sqrt(n) * math.log(n)))
    rng = make_rng(settings.XP_SPECTRAL_SEED if seed is None else seed)
    A = graph.adjacency_matrix()

    top, v_top, it_top, res_top, ok_top = _shifted_power(lambda v: A @ v + d * v, n, rng, tol * d, max_iter)
    bot, v_bot, it_bot, res_bot, ok_bot = _shifted_power(lambda v: d * v - A @ v, n, rng, tol * d, max_iter)
    lam2, lam_min = top - d, d - bot

    ones = np.full(n, 1.0 / math.sqrt(n))
    overlap = max(abs(float(v_top @ ones)), abs(float(v_bot @ ones)))
    report = _classify(graph, lam2, lam_min, "power-iteration", it_top + it_bot, max(res_top, res_bot), overlap)
    if not (ok_top and ok_bot):
        logger.warning(f"[spectral/power] no convergence in {max_iter} iterations, "
                       f"best lambda={report.lambda_est:.6f}, residual={report.residual:.3e}")
        raise ConvergenceError(
            f"power iteration did not settle to {tol * d:.3e} per iteration within {max_iter} iterations",
            best_estimate=report.lambda_est,
            iterations=report.iterations,
            residual=report.residual,
        )
    logger.info(f"[spectral/power] n={n}, lambda={report.lambda_est:.6f} after {report.iterations} iterations")
    return report

def estimate_lambda(graph: Graph, **power_kwargs) -> SpectralReport:
    """Exact eigensolve when n fits the dense budget, power iteration otherwise."""
    if graph.n <= get_settings().XP_DENSE_EIG_MAX_N:
        return lambda_exact(graph)
    return lambda_power(graph, **power_kwargs)
