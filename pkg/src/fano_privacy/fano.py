"""Advantage upper bounds from Fano-type inequalities.

An information bound ``I(X;Y) <= eps`` constrains the error probability ``t``
of any reconstruction adversary through

    f_eps(t) = H(p) - eps + t log t + (1-t) log(1-t) - t log(M-1) <= 0,

so ``t* = min{t : f_eps(t) <= 0}`` lower-bounds the error and
``(1 - t* - p*) / (1 - p*)`` upper-bounds the advantage. The order-alpha
version replaces the entropy by the Renyi entropy and the binary terms by
``D_alpha(Ber(t) || Ber(1 - 1/M)) - log M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import logsumexp, xlogy

from fano_privacy.info_theory import Prior, entropy, renyi_entropy
from fano_privacy.mi_bounds import MiBound, RdpCurve, mi_from_rdp

BISECT_MAX_ITER = 200
BISECT_TOL = 1e-12
# slack for the analytic identity f(1 - 1/M) = H - eps - log M <= 0
_ENDPOINT_SLACK = 1e-12
PRESCAN_STEP = 1e-3
DEFAULT_ALPHA_GRID = (1.0, 1.1, 1.25, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0, 48.0, 64.0)
RERO_ALPHA_GRID = tuple(np.geomspace(1.0 + 2.0**-6, 2.0**12, 241))


class BoundAssertionError(ArithmeticError):
    """The endpoint sign conditions of the bisection do not hold."""


@dataclass(frozen=True)
class AdvantageBound:
    t_star: float
    success_upper: float
    p_star: float
    advantage: float
    method: str
    inputs_echo: Dict[str, Any] = field(default_factory=dict)

    @property
    def alpha(self) -> Optional[float]:
        return self.inputs_echo.get("alpha")

    @property
    def info_bound(self) -> Optional[float]:
        return self.inputs_echo.get("eps")


def _check_p_star(p_star: float) -> None:
    if not 0.0 <= p_star < 1.0:
        raise ValueError(f"advantage is undefined for p_star = {p_star}")


def advantage_from_success(success: float, p_star: float, clamp: bool = True) -> float:
    """Normalized gain ``(success - p*) / (1 - p*)`` over Bayes-baseline guessing.

    With ``clamp=False`` the raw value is returned; empirical attacks that do
    worse than always guessing the mode have negative advantage.
    """
    if not 0.0 <= success <= 1.0:
        raise ValueError(f"success probability must lie in [0, 1], got {success}")
    _check_p_star(p_star)
    adv = (success - p_star) / (1.0 - p_star)
    if clamp:
        adv = min(max(adv, 0.0), 1.0)
    return adv


def rero_to_advantage(gamma: float, p_star: float) -> float:
    """Advantage bound implied by ``(eta, gamma)``-ReRo under zero-one loss."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    return advantage_from_success(gamma, p_star, clamp=True)


def f_eps(t, H: float, eps: float, M: int):
    """Fano constraint function; ``t`` may be a scalar or an array."""
    t = np.asarray(t, dtype=float)
    val = H - eps + xlogy(t, t) + xlogy(1.0 - t, 1.0 - t) - t * math.log(M - 1)
    return float(val) if val.ndim == 0 else val


def bernoulli_renyi_to_uniform_error(t, alpha: float, M: int):
    """``D_alpha(Ber(t) || Ber(1 - 1/M))`` for scalar or array ``t``."""
    t = np.asarray(t, dtype=float)
    log_a = math.log1p(-1.0 / M)  # log(1 - 1/M)
    log_b = -math.log(M)  # log(1/M)
    if alpha == 1.0:
        val = xlogy(t, t) - t * log_a + xlogy(1.0 - t, 1.0 - t) - (1.0 - t) * log_b
    else:
        with np.errstate(divide="ignore"):
            terms = np.stack([
                np.where(t > 0, alpha * np.log(t) + (1.0 - alpha) * log_a, -np.inf),
                np.where(t < 1, alpha * np.log1p(-t) + (1.0 - alpha) * log_b, -np.inf),
            ])
        val = logsumexp(terms, axis=0) / (alpha - 1.0)
    val = np.maximum(val, 0.0)
    return float(val) if val.ndim == 0 else val


def generalized_f(t, H_alpha: float, eps: float, alpha: float, M: int):
    val = H_alpha - eps - math.log(M) + np.asarray(bernoulli_renyi_to_uniform_error(t, alpha, M))
    return float(val) if np.ndim(val) == 0 else val


def _bisect_first_nonpositive(f, lo: float, hi: float) -> float:
    """Smallest ``t`` in ``[lo, hi]`` with ``f(t) <= 0``, assuming f(lo) > 0 >= f(hi).

    Returns the right end of the final bracket, which always satisfies the
    constraint.
    """
    for _ in range(BISECT_MAX_ITER):
        if hi - lo < BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return hi


def _bound_from_t(t_star: float, prior: Prior, method: str, echo: Dict[str, Any]) -> AdvantageBound:
    success = 1.0 - t_star
    adv = advantage_from_success(min(max(success, 0.0), 1.0), prior.p_star, clamp=True)
    return AdvantageBound(t_star, success, prior.p_star, adv, method, echo)


def _vacuous(prior: Prior, method: str, echo: Dict[str, Any]) -> AdvantageBound:
    return AdvantageBound(0.0, 1.0, prior.p_star, 1.0, method, echo)


def _solve(f, prior: Prior, method: str, echo: Dict[str, Any], prescan: bool) -> AdvantageBound:
    hi = 1.0 - 1.0 / prior.M
    f0, f_hi = f(0.0), f(hi)
    if not f0 > 0:
        raise BoundAssertionError(f"{method}: f(0) = {f0!r} must be positive")
    if not f_hi <= _ENDPOINT_SLACK:
        raise BoundAssertionError(f"{method}: f(1 - 1/M) = {f_hi!r} must be non-positive")
    if f_hi > 0:
        return _bound_from_t(hi, prior, method, echo)
    lo = 0.0
    if prescan:
        n = max(int(math.ceil(hi / PRESCAN_STEP)), 1)
        grid = np.linspace(0.0, hi, n + 1)
        feasible = f(grid) <= 0
        first = int(np.argmax(feasible)) if feasible.any() else n
        lo, hi = float(grid[first - 1]), float(grid[first])
    return _bound_from_t(_bisect_first_nonpositive(f, lo, hi), prior, method, echo)


def fano_advantage_bound(mi: MiBound, prior: Prior) -> AdvantageBound:
    """Advantage bound from a mutual-information bound (binary search on t)."""
    if mi.order != 1:
        raise ValueError(f"Fano bound needs an order-1 information bound, got order {mi.order}")
    echo = {"eps": mi.value, "alpha": 1.0, "M": prior.M, "kind": mi.kind.value}
    H = entropy(prior)
    if mi.value >= H:
        return _vacuous(prior, "fano", echo)
    return _solve(lambda t: f_eps(t, H, mi.value, prior.M), prior, "fano", echo, prescan=False)


def generalized_fano_bound(ib: MiBound, prior: Prior) -> AdvantageBound:
    """Advantage bound from an order-alpha Arimoto-information bound.

    For ``alpha > 1`` the constraint is first evaluated on a ``1e-3`` grid and
    the first grid cell where it turns non-positive brackets the bisection.
    The result stays the smallest feasible ``t`` even if the constraint is not
    monotone on ``[0, 1 - 1/M]``.
    """
    alpha, eps, M = ib.order, ib.value, prior.M
    method = f"generalized-fano({alpha:g})"
    echo = {"eps": eps, "alpha": alpha, "M": M, "kind": ib.kind.value}
    H_alpha = renyi_entropy(prior, alpha)
    if eps >= H_alpha:
        return _vacuous(prior, method, echo)
    return _solve(
        lambda t: generalized_f(t, H_alpha, eps, alpha, M), prior, method, echo,
        prescan=alpha > 1.0,
    )


def best_generalized_fano(
    curve: RdpCurve, prior: Prior, alpha_grid: Iterable[float] = DEFAULT_ALPHA_GRID
) -> AdvantageBound:
    """Smallest generalized-Fano advantage bound over the orders in ``alpha_grid``."""
    alphas = [float(a) for a in alpha_grid]
    if not alphas:
        raise ValueError("alpha grid is empty")
    if any(not a >= 1 for a in alphas):
        raise ValueError("all orders must be >= 1")
    best = None
    for a in alphas:
        bound = generalized_fano_bound(mi_from_rdp(curve, a), prior)
        if best is None or bound.advantage < best.advantage:
            best = bound
    return best


def _rero_log_success(curve: RdpCurve, alpha: float, log_m: float) -> float:
    return (1.0 - 1.0 / alpha) * (curve(alpha) - log_m)


def rero_baseline_bound(
    curve: RdpCurve, M: int, prior: Optional[Prior] = None,
    alpha_grid: Sequence[float] = RERO_ALPHA_GRID,
) -> AdvantageBound:
    """Baseline from reconstruction robustness of RDP mechanisms.

    Success is at most ``(exp(eps(alpha)) / M) ** ((alpha - 1) / alpha)`` for
    every ``alpha > 1``. The exponent is minimized over a log-spaced grid and
    refined by bounded golden-section search between the grid neighbours of
    the best point. Uniform priors only.
    """
    if prior is None:
        prior = Prior.uniform(M)
    if prior.M != M:
        raise ValueError(f"prior has M = {prior.M}, expected {M}")
    if not prior.is_uniform:
        raise ValueError("the ReRo baseline is only defined here for uniform priors")
    log_m = math.log(M)
    alphas = np.array([a for a in alpha_grid if a > 1 and curve.in_domain(a)], dtype=float)
    if alphas.size == 0:
        raise ValueError("no order alpha > 1 inside the curve domain")
    values = np.array([_rero_log_success(curve, a, log_m) for a in alphas])
    i = int(np.argmin(values))
    best_alpha, best_val = float(alphas[i]), float(values[i])
    lo = float(alphas[max(i - 1, 0)])
    hi = float(alphas[min(i + 1, alphas.size - 1)])
    if hi > lo and math.isfinite(best_val):
        res = minimize_scalar(
            lambda a: _rero_log_success(curve, a, log_m), bounds=(lo, hi),
            method="bounded", options={"xatol": 1e-10},
        )
        if res.fun < best_val:
            best_alpha, best_val = float(res.x), float(res.fun)
    if curve.sup_eps is not None and curve.alpha_max == math.inf:
        limit = curve.sup_eps - log_m  # alpha -> infinity
        if limit < best_val:
            best_alpha, best_val = math.inf, limit
    success = min(math.exp(best_val), 1.0)
    adv = rero_to_advantage(success, prior.p_star)
    echo = {"alpha": best_alpha, "eps": curve(best_alpha) if math.isfinite(best_alpha) else curve.sup_eps, "M": M}
    return AdvantageBound(1.0 - success, success, prior.p_star, adv, "rero", echo)
