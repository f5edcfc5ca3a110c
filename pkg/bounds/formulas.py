# closed-form evaluators for the quantitative bounds on (n, d, lambda)-graphs and on the
# query lower-bound games
# all evaluators use real arithmetic; powers that can overflow go through log space
from __future__ import annotations

import math

from pydantic import BaseModel, Field, model_validator

from core.errors import ParameterError

# exp() overflows a double just above this
_LOG_OVERFLOW = 700.0

class ExpanderParams(BaseModel):
    """(n, d, lambda) with 0 < lambda < d <= n - 1."""
    n: int = Field(ge=2)
    d: int = Field(ge=1)
    lam: float = Field(gt=0.0, alias="lambda")

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def _check_ranges(self) -> "ExpanderParams":
        if not self.lam < self.d:
            raise ValueError(f"need lambda < d, got lambda={self.lam}, d={self.d}")
        if self.d > self.n - 1:
            raise ValueError(f"need d <= n - 1, got d={self.d}, n={self.n}")
        return self

    @property
    def ratio(self) -> float:
        """lambda / d."""
        return self.lam / self.d

    def lg(self, x: float) -> float:
        """lg_{d/lambda}(x)."""
        return math.log(x) / math.log(self.d / self.lam)

def _exp_guarded(log_value: float) -> float:
    return math.inf if log_value > _LOG_OVERFLOW else math.exp(log_value)

def _ceil(x: float) -> int:
    # ln/ln quotients of exact powers land a few ulps above the integer
    return math.ceil(x - 1e-12)

# ── distances ─────────────────────────────────────────────────────────────────

def far_node_bound(params: ExpanderParams, k: int) -> float:
    """|{t : dist(s, t) > k}| <= (lambda/d)^{2k} n^2."""
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    return params.ratio ** (2 * k) * params.n ** 2

def radius_for_fraction(params: ExpanderParams, delta: float) -> float:
    """Radius (1/2) lg_{d/lambda}(n/delta) outside which at most delta*n nodes lie."""
    if not 0.0 < delta <= 1.0:
        raise ParameterError(f"delta must lie in (0, 1], got {delta}")
    return 0.5 * params.lg(params.n / delta)

def diameter_bound(params: ExpanderParams) -> int:
    """ceil(lg_{d/lambda} n)."""
    return _ceil(params.lg(params.n))

# ── walks ─────────────────────────────────────────────────────────────────────

def log_confined_walk_bound(params: ExpanderParams, w: int, k: int) -> float:
    """Natural log of w d^k (mu + (lambda/d)(1 - mu))^k with mu = w/n; -inf when w = 0."""
    if not 0 <= w <= params.n:
        raise ParameterError(f"w must lie in [0, n], got {w}")
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    if w == 0:
        return -math.inf
    mu = w / params.n
    # d^k (mu + r(1 - mu))^k = (d mu + lambda (1 - mu))^k
    return math.log(w) + k * math.log(params.d * mu + params.lam * (1.0 - mu))

def confined_walk_bound(params: ExpanderParams, w: int, k: int) -> float:
    """Bound on the number of length-k walks (k+1 nodes) that stay inside a w-node set."""
    log_value = log_confined_walk_bound(params, w, k)
    return 0.0 if log_value == -math.inf else _exp_guarded(log_value)

def mixing_deviation_bound(params: ExpanderParams, k: int) -> float:
    """|1/n - p^k_{s,t}| <= (lambda/d)^k."""
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    return params.ratio ** k

def walk_miss_probability_bound(n: int, k: int, log_base: float) -> float:
    """
    Probability that all k/(3 lg) walks of length 3 lg miss a k-node BFS ball:
    exp(-k^2/(6n) + k/(3 lg n)), lg = lg_{d/lambda}(n).
    """
    return min(1.0, math.exp(-k * k / (6.0 * n) + k / (3.0 * log_base * n)))

# ── visited-node bounds for bidirectional BFS ─────────────────────────────────

def bibfs_visit_bound(params: ExpanderParams, delta: float) -> float:
    """(d-1)^ceil((1/4) lg_{d/lambda}(n/delta)) nodes, up to the constant."""
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    exponent = math.ceil(0.25 * params.lg(params.n / delta))
    if params.d <= 1:
        return 1.0
    return _exp_guarded(exponent * math.log(params.d - 1))

def ramanujan_visit_bound(n: int) -> float:
    """sqrt(n) ln^{3/2}(n), up to the constant."""
    return math.sqrt(n) * math.log(n) ** 1.5

def distance_window(n: int, d: int) -> tuple[float, float]:
    """(center, slack) of the distance window lg_{d-1} n +- 3 lg_{d-1} lg n, d >= 3."""
    if d < 3:
        raise ParameterError(f"distance window needs d >= 3, got {d}")
    base = math.log(d - 1)
    return math.log(n) / base, 3.0 * math.log(math.log2(n)) / base

# ── query lower bounds ────────────────────────────────────────────────────────

def er_connected_trace_bound(n: int, p: float, q: int) -> float:
    """P[trace connected after q node-incidence queries on G(n, p)] <= p^2 n (q+1)^2 + q/sqrt(n)."""
    return p * p * n * (q + 1) ** 2 + q / math.sqrt(n)

def er_success_bound(n: int, p: float, q: int) -> float:
    """P[valid s-t path output] <= P[connected] + p."""
    return er_connected_trace_bound(n, p, q) + p

def _matching_denominator(n: int, d: int, q: int) -> float:
    return n * d - 1 - 2 * d * q

def matching_connected_trace_bound(n: int, d: int, q: int) -> float:
    """P[meta trace connected after q group queries] <= d^3 q^2 / (nd - 1 - 2dq)."""
    den = _matching_denominator(n, d, q)
    return math.inf if den <= 0 else d ** 3 * q * q / den

def matching_guess_bound(n: int, d: int, q: int) -> float:
    """P[output meta-path valid | trace disconnected] <= d^2 / (nd - 1 - 2dq)."""
    den = _matching_denominator(n, d, q)
    return math.inf if den <= 0 else d * d / den

def simple_contraction_probability(d: int) -> float:
    """Asymptotic probability that a configuration-model pairing contracts to a simple graph."""
    return math.exp(-(d * d - 1) / 4.0)
