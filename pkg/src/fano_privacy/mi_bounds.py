"""Mutual-information bounds and estimates for concrete DP mechanisms.

Covers randomized response (exact MI, epsilon-DP map), the Gaussian
mechanism (analytic bound and Monte-Carlo estimate) and RDP curves, which
bound the order-alpha Arimoto information by ``eps(alpha)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np
from scipy.special import logsumexp

from fano_privacy.info_theory import (
    ArrayLike,
    ChannelMatrix,
    Prior,
    entropy,
    mutual_information,
    renyi_divergence,
)

DEFAULT_MC_SAMPLES = 100_000
MIN_MC_SAMPLES = 1000
_MC_CHUNK = 8192
_MONOTONE_GRID = tuple(2.0**k for k in range(10))  # 1, 2, 4, ..., 512


class BoundKind(str, enum.Enum):
    EXACT = "exact"
    ANALYTIC = "analytic-bound"
    RDP = "rdp-derived"
    MONTE_CARLO = "monte-carlo"


@dataclass(frozen=True)
class MiBound:
    """An upper bound on (or estimate of) ``I_alpha(X;Y)`` in nats."""

    value: float
    order: float = 1.0
    kind: BoundKind = BoundKind.EXACT
    stderr: Optional[float] = None
    description: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", BoundKind(self.kind))
        if not self.value >= 0:
            raise ValueError(f"information bound must be >= 0, got {self.value}")
        if not self.order >= 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if (self.stderr is not None) != (self.kind is BoundKind.MONTE_CARLO):
            raise ValueError("stderr is present exactly for monte-carlo bounds")
        if self.stderr is not None and not self.stderr >= 0:
            raise ValueError("stderr must be non-negative")


@dataclass(frozen=True)
class RrSpec:
    """Randomized response: keep the secret w.p. ``1 - q``, else uniform."""

    q: float
    M: int

    def __post_init__(self):
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"q must lie in [0, 1], got {self.q}")
        if int(self.M) != self.M or self.M < 2:
            raise ValueError(f"M must be an integer >= 2, got {self.M}")
        object.__setattr__(self, "M", int(self.M))


@dataclass(frozen=True, eq=False)
class GaussianSpec:
    """Gaussian mechanism ``Y | X=m  ~  N(e_m, sigma^2 I)``."""

    encodings: np.ndarray
    sigma: float
    prior: Prior

    def __post_init__(self):
        enc = np.array(self.encodings, dtype=float)
        if enc.ndim == 1:
            enc = enc[:, None]
        if enc.ndim != 2 or enc.shape[0] < 2 or enc.shape[1] < 1:
            raise ValueError("encodings must be an M x d matrix with M >= 2, d >= 1")
        if not np.all(np.isfinite(enc)):
            raise ValueError("encodings must be finite")
        if not self.sigma > 0 or not math.isfinite(self.sigma):
            raise ValueError(f"sigma must be positive and finite, got {self.sigma}")
        if self.prior.M != enc.shape[0]:
            raise ValueError(
                f"prior has M = {self.prior.M} but there are {enc.shape[0]} encodings"
            )
        enc.setflags(write=False)
        object.__setattr__(self, "encodings", enc)
        object.__setattr__(self, "sigma", float(self.sigma))

    @property
    def M(self) -> int:
        return self.encodings.shape[0]

    @property
    def d(self) -> int:
        return self.encodings.shape[1]

    @classmethod
    def one_hot(cls, M: int, sigma: float, prior: Optional[Prior] = None) -> "GaussianSpec":
        return cls(np.eye(M), sigma, prior if prior is not None else Prior.uniform(M))


class RdpCurve:
    """An RDP guarantee ``alpha -> eps(alpha)`` (nats) on ``[alpha_min, alpha_max]``.

    The curve is spot-checked on ``{1, 2, 4, ..., 512}`` (clipped to the
    domain) for non-negativity and monotonicity; a violation raises.

    Args:
        fn: Evaluator for ``eps(alpha)``.
        alpha_min: Smallest valid order (``>= 1``).
        alpha_max: Largest valid order, possibly ``inf``.
        name: Label used in reports.
        sup_eps: The limit of ``eps(alpha)`` as alpha grows, when finite and
            known (constant curves). Lets optimizers over alpha use the limit.
    """

    def __init__(
        self,
        fn: Callable[[float], float],
        alpha_min: float = 1.0,
        alpha_max: float = math.inf,
        name: str = "rdp",
        sup_eps: Optional[float] = None,
    ):
        if not 1.0 <= alpha_min <= alpha_max:
            raise ValueError("need 1 <= alpha_min <= alpha_max")
        self._fn = fn
        self.alpha_min = float(alpha_min)
        self.alpha_max = float(alpha_max)
        self.name = name
        self.sup_eps = sup_eps
        grid = [a for a in _MONOTONE_GRID if alpha_min <= a <= alpha_max]
        grid = sorted({self.alpha_min, *grid} | ({self.alpha_max} if math.isfinite(alpha_max) else set()))
        values = [float(fn(a)) for a in grid]
        if any(not v >= 0 for v in values):
            raise ValueError(f"RDP curve {name!r} is negative or NaN on {grid}")
        if any(b < a - 1e-12 * max(1.0, a) for a, b in zip(values, values[1:])):
            raise ValueError(f"RDP curve {name!r} is not nondecreasing in alpha")

    def in_domain(self, alpha: float) -> bool:
        return self.alpha_min <= alpha <= self.alpha_max

    def __call__(self, alpha: float) -> float:
        if not self.in_domain(alpha):
            raise ValueError(
                f"alpha = {alpha} outside [{self.alpha_min}, {self.alpha_max}] for {self.name!r}"
            )
        return float(self._fn(alpha))

    def __repr__(self):
        return f"RdpCurve({self.name!r}, alpha in [{self.alpha_min}, {self.alpha_max}])"

    @classmethod
    def constant(cls, eps: float, name: Optional[str] = None) -> "RdpCurve":
        """Curve of an ``eps``-DP mechanism, which is ``(alpha, eps)``-RDP for all alpha."""
        eps = float(eps)
        return cls(lambda a: eps, name=name or f"constant({eps:g})", sup_eps=eps)

    @classmethod
    def linear(cls, slope: float, name: Optional[str] = None) -> "RdpCurve":
        """``eps(alpha) = slope * alpha``, the shape of Gaussian-noise RDP."""
        slope = float(slope)
        if not slope >= 0:
            raise ValueError(f"slope must be non-negative, got {slope}")
        sup = 0.0 if slope == 0 else None
        return cls(lambda a: slope * a, name=name or f"linear({slope:g})", sup_eps=sup)


# --- randomized response ---------------------------------------------------


def rr_channel(spec: RrSpec) -> ChannelMatrix:
    M, q = spec.M, spec.q
    mat = np.full((M, M), q / M)
    np.fill_diagonal(mat, 1.0 - q + q / M)
    return ChannelMatrix(mat)


def rr_epsilon_dp(spec: RrSpec) -> float:
    """Pure-DP level ``log((1 - q + q/M) / (q/M))``; ``inf`` at ``q = 0``."""
    if spec.q == 0:
        return math.inf
    M, q = spec.M, spec.q
    return math.log1p((1.0 - q) * M / q)


def rr_exact_mi(spec: RrSpec, prior: Prior) -> MiBound:
    if prior.M != spec.M:
        raise ValueError(f"prior has M = {prior.M} but mechanism has M = {spec.M}")
    value = mutual_information(prior, rr_channel(spec))
    return MiBound(value, 1.0, BoundKind.EXACT, description=f"exact MI, RR q={spec.q:g}")


def rr_rdp_curve(spec: RrSpec) -> RdpCurve:
    """Exact RDP curve of randomized response.

    By symmetry every pair of inputs gives the same output divergence, so
    ``eps(alpha) = D_alpha(P(Y | X=0) || P(Y | X=1))``. Tighter than the
    constant curve at ``rr_epsilon_dp`` and tends to it as alpha grows.
    """
    if spec.q == 0:
        return RdpCurve(lambda a: math.inf, name=f"rr(q=0, M={spec.M})")
    rows = rr_channel(spec).matrix
    return RdpCurve(
        lambda a: renyi_divergence(rows[0], rows[1], a),
        name=f"rr(q={spec.q:g}, M={spec.M})", sup_eps=rr_epsilon_dp(spec),
    )


# --- RDP curves --------------------------------------------------------------


def mi_from_rdp(curve: RdpCurve, alpha: float = 1.0) -> MiBound:
    """Bound ``I_alpha(X;Y) <= eps(alpha)`` for an ``(alpha, eps)``-RDP mechanism."""
    value = curve(alpha)
    return MiBound(value, float(alpha), BoundKind.RDP, description=f"{curve.name} at alpha={alpha:g}")


def gaussian_rdp_curve(delta: float, sigma: float) -> RdpCurve:
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if not delta >= 0:
        raise ValueError(f"sensitivity must be non-negative, got {delta}")
    return RdpCurve.linear(delta**2 / (2.0 * sigma**2), name=f"gaussian(delta={delta:g}, sigma={sigma:g})")


def dpsgd_rdp_curve(steps: int, sigma: float, clip: float = 1.0) -> RdpCurve:
    """Unamplified DP-SGD composition, ``eps(alpha) = alpha * T * C^2 / (2 sigma^2)``."""
    if isinstance(steps, bool) or int(steps) != steps or steps < 1:
        raise ValueError(f"steps must be an integer >= 1, got {steps}")
    if not sigma > 0:
        raise ValueError(f"noise multiplier must be positive, got {sigma}")
    if not clip > 0:
        raise ValueError(f"clipping norm must be positive, got {clip}")
    slope = int(steps) * clip**2 / (2.0 * sigma**2)
    return RdpCurve.linear(slope, name=f"dpsgd(T={int(steps)}, sigma={sigma:g}, C={clip:g})")


# --- Gaussian mechanism ------------------------------------------------------


def pairwise_sensitivity(encodings: ArrayLike) -> float:
    """Largest pairwise L2 distance between rows of ``encodings``."""
    enc = np.asarray(encodings, dtype=float)
    if enc.ndim == 1:
        enc = enc[:, None]
    if enc.shape[0] < 2:
        raise ValueError("need at least two encodings")
    best = 0.0
    for i in range(enc.shape[0] - 1):
        dist = np.linalg.norm(enc[i + 1 :] - enc[i], axis=1)
        best = max(best, float(dist.max()))
    return best


def gaussian_mi_bound_thm2(prior: Prior, delta: float, sigma: float) -> MiBound:
    """Closed-form MI bound for a Gaussian mixture with pairwise distance <= delta.

    ``-sum_m p_m log(p_m + (1 - p_m) exp(-delta^2 / (2 sigma^2)))``
    """
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if not delta >= 0:
        raise ValueError(f"sensitivity must be non-negative, got {delta}")
    if math.isinf(delta):
        value = entropy(prior)
    else:
        decay = math.exp(-(delta**2) / (2.0 * sigma**2))
        if prior.is_uniform:
            p = 1.0 / prior.M
            value = -math.log(p + (1.0 - p) * decay)
        else:
            p = prior.probs
            mask = p > 0
            value = float(-np.sum(p[mask] * np.log(p[mask] + (1.0 - p[mask]) * decay)))
    return MiBound(
        max(value, 0.0), 1.0, BoundKind.ANALYTIC,
        description=f"Gaussian mixture bound, delta={delta:g}, sigma={sigma:g}",
    )


def mc_seed_sequence(seed: int, chunk: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(int(seed), spawn_key=(1, int(chunk)))


def _mc_terms(spec: GaussianSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    probs = spec.prior.probs
    cdf = np.cumsum(probs)
    cdf[-1] = 1.0
    k = np.searchsorted(cdf, rng.random(n), side="right")
    noise = rng.standard_normal((n, spec.d))
    y = spec.encodings[k] + spec.sigma * noise
    # log density up to the shared Gaussian normalizer, which cancels
    sq = ((y[:, None, :] - spec.encodings[None, :, :]) ** 2).sum(axis=2)
    log_lik = -sq / (2.0 * spec.sigma**2)
    with np.errstate(divide="ignore"):
        log_mix = logsumexp(log_lik + np.log(probs)[None, :], axis=1)
    own = -(noise**2).sum(axis=1) / 2.0
    return own - log_mix


def gaussian_mi_monte_carlo(
    spec: GaussianSpec, n_samples: int = DEFAULT_MC_SAMPLES, seed: int = 0
) -> MiBound:
    """Unbiased Monte-Carlo estimate of ``I(X;Y)`` for the Gaussian mechanism.

    Each sample draws ``k ~ prior`` and ``y ~ N(e_k, sigma^2 I)`` and scores
    ``log phi(y; e_k) - log sum_m p_m phi(y; e_m)``. Samples are drawn in
    fixed-size chunks, each from its own stream keyed by ``(seed, chunk)``, so
    the result depends only on ``(spec, n_samples, seed)``.
    """
    n_samples = int(n_samples)
    if n_samples < MIN_MC_SAMPLES:
        raise ValueError(f"n_samples must be >= {MIN_MC_SAMPLES}, got {n_samples}")
    desc = f"Monte-Carlo MI, n={n_samples}, seed={seed}, sigma={spec.sigma:g}"
    if pairwise_sensitivity(spec.encodings) == 0:
        return MiBound(0.0, 1.0, BoundKind.MONTE_CARLO, stderr=0.0, description=desc)

    total = 0.0
    total_sq = 0.0
    for chunk, start in enumerate(range(0, n_samples, _MC_CHUNK)):
        n = min(_MC_CHUNK, n_samples - start)
        rng = np.random.default_rng(mc_seed_sequence(seed, chunk))
        terms = _mc_terms(spec, n, rng)
        total += math.fsum(terms)
        total_sq += math.fsum(terms**2)
    mean = total / n_samples
    var = max(total_sq / n_samples - mean**2, 0.0) * n_samples / (n_samples - 1)
    stderr = math.sqrt(var / n_samples)
    # Estimator is unbiased and may dip below 0; the bound type requires >= 0.
    return MiBound(max(mean, 0.0), 1.0, BoundKind.MONTE_CARLO, stderr=stderr, description=desc)


def load_encodings_csv(path) -> np.ndarray:
    """Reads an M x d encoding matrix from a header-less numeric CSV."""
    enc = np.loadtxt(path, delimiter=",", dtype=float, ndmin=2)
    if enc.shape[0] < 2:
        raise ValueError(f"{path}: need at least two encoding rows")
    return enc


MechanismSpec = Union[RrSpec, GaussianSpec]
