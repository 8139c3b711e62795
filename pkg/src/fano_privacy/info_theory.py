"""Information-theoretic primitives over finite distributions.

All quantities are in nats. ``0 log 0`` and ``0 ** alpha`` are taken to be 0,
so zero-probability cells never produce NaN.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence, Union

import numpy as np
from scipy.special import logsumexp, xlogy

PROB_ATOL = 1e-9

ArrayLike = Union[Sequence[float], np.ndarray]


def _check_order(alpha: float) -> float:
    alpha = float(alpha)
    if not alpha >= 1.0:
        raise ValueError(f"order alpha must be >= 1, got {alpha}")
    return alpha


def _as_distribution(p: ArrayLike, name: str = "distribution") -> np.ndarray:
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise ValueError(f"{name} entries must be finite and non-negative")
    if abs(arr.sum() - 1.0) > PROB_ATOL:
        raise ValueError(f"{name} must sum to 1 (got {arr.sum()!r})")
    return arr


class Prior:
    """Categorical distribution over the ``M`` candidate secrets.

    Use :meth:`uniform` for the uniform prior. It stores only ``M``, so
    astronomically large candidate sets (e.g. ``M = 10**10``) are fine as long
    as nothing asks for the explicit probability vector.

    Args:
        probs: Probability of each candidate. Must sum to 1 within ``1e-9``.
        renormalize: Divide ``probs`` by its sum first. Off by default;
            inputs are never silently rescaled.
    """

    __slots__ = ("_probs", "M", "p_star", "is_uniform")

    def __init__(self, probs: ArrayLike, renormalize: bool = False):
        arr = np.array(probs, dtype=float)
        if renormalize:
            if arr.ndim != 1 or np.any(arr < 0) or not arr.sum() > 0:
                raise ValueError("cannot renormalize: need non-negative weights")
            arr = arr / arr.sum()
        arr = _as_distribution(arr, "prior")
        if arr.size < 2:
            raise ValueError("prior needs at least M = 2 candidates")
        arr.setflags(write=False)
        self._probs: Optional[np.ndarray] = arr
        self.M = int(arr.size)
        self.p_star = float(arr.max())
        self.is_uniform = bool(np.all(arr == arr[0]))

    @classmethod
    def uniform(cls, M: int) -> "Prior":
        M = int(M)
        if M < 2:
            raise ValueError("prior needs at least M = 2 candidates")
        self = cls.__new__(cls)
        self._probs = None
        self.M = M
        self.p_star = 1.0 / M
        self.is_uniform = True
        return self

    @property
    def probs(self) -> np.ndarray:
        if self._probs is None:
            arr = np.full(self.M, 1.0 / self.M)
            arr.setflags(write=False)
            return arr
        return self._probs

    def __eq__(self, other):
        if not isinstance(other, Prior):
            return NotImplemented
        if self.M != other.M:
            return False
        if self.is_uniform and other.is_uniform:
            return True
        return bool(np.array_equal(self.probs, other.probs))

    def __hash__(self):
        return hash((self.M, self.p_star, self.is_uniform))

    def __repr__(self):
        if self._probs is None:
            return f"Prior.uniform({self.M})"
        return f"Prior({self._probs.tolist()!r})"


class ChannelMatrix:
    """Conditional distribution ``P(Y = y | X = x)``; rows are inputs."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: ArrayLike):
        arr = np.array(matrix, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("channel must be a non-empty 2-D array")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0):
            raise ValueError("channel entries must be finite and non-negative")
        bad = np.abs(arr.sum(axis=1) - 1.0) > PROB_ATOL
        if np.any(bad):
            raise ValueError(f"channel rows {np.flatnonzero(bad).tolist()} do not sum to 1")
        arr.setflags(write=False)
        self.matrix = arr

    def __repr__(self):
        return f"ChannelMatrix({self.matrix.tolist()!r})"

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    def merge_columns(self, mapping: ArrayLike) -> "ChannelMatrix":
        """Post-processes the output with a deterministic map ``y -> mapping[y]``."""
        mapping = np.asarray(mapping, dtype=int)
        if mapping.shape != (self.cols,) or np.any(mapping < 0):
            raise ValueError("mapping must assign a non-negative label to every column")
        out = np.zeros((self.rows, int(mapping.max()) + 1))
        np.add.at(out.T, mapping, self.matrix.T)
        return ChannelMatrix(out)


def _check_dims(prior: Prior, ch: ChannelMatrix) -> None:
    if ch.rows != prior.M:
        raise ValueError(f"channel has {ch.rows} rows but prior has M = {prior.M}")


def binary_entropy(t: float) -> float:
    """H_b(t) in nats."""
    return float(-xlogy(t, t) - xlogy(1.0 - t, 1.0 - t))


def entropy(p: Prior) -> float:
    """Shannon entropy H(X) in nats."""
    if p.is_uniform:
        return math.log(p.M)
    return float(-np.sum(xlogy(p.probs, p.probs)))


def renyi_entropy(p: Prior, alpha: float) -> float:
    """Renyi entropy of order ``alpha >= 1``; the Shannon entropy at ``alpha = 1``."""
    alpha = _check_order(alpha)
    if p.is_uniform:
        return math.log(p.M)
    if alpha == 1.0:
        return entropy(p)
    probs = p.probs[p.probs > 0]
    return float(logsumexp(alpha * np.log(probs)) / (1.0 - alpha))


def kl_divergence(p: ArrayLike, q: ArrayLike) -> float:
    p = _as_distribution(p, "p")
    q = _as_distribution(q, "q")
    if p.shape != q.shape:
        raise ValueError("distributions must have the same support size")
    mask = p > 0
    if np.any(q[mask] == 0):
        return math.inf
    return float(np.sum(p[mask] * (np.log(p[mask]) - np.log(q[mask]))))


def renyi_divergence(p: ArrayLike, q: ArrayLike, alpha: float) -> float:
    """Renyi divergence ``D_alpha(p || q)``; KL divergence at ``alpha = 1``.

    Returns ``inf`` if ``p`` puts mass where ``q`` has none.
    """
    alpha = _check_order(alpha)
    if alpha == 1.0:
        return kl_divergence(p, q)
    p = _as_distribution(p, "p")
    q = _as_distribution(q, "q")
    if p.shape != q.shape:
        raise ValueError("distributions must have the same support size")
    mask = p > 0
    if np.any(q[mask] == 0):
        return math.inf
    terms = alpha * np.log(p[mask]) + (1.0 - alpha) * np.log(q[mask])
    return max(float(logsumexp(terms) / (alpha - 1.0)), 0.0)


def mutual_information(p: Prior, ch: ChannelMatrix) -> float:
    """Exact I(X;Y) from the joint/marginal double sum."""
    _check_dims(p, ch)
    joint = p.probs[:, None] * ch.matrix
    marginal = joint.sum(axis=0)
    mask = joint > 0
    log_ratio = np.log(ch.matrix[mask]) - np.log(np.broadcast_to(marginal, joint.shape)[mask])
    return max(float(np.sum(joint[mask] * log_ratio)), 0.0)


def arimoto_information(p: Prior, ch: ChannelMatrix, alpha: float) -> float:
    """Arimoto information of order ``alpha``; mutual information at ``alpha = 1``.

    Evaluated in the log domain with the alpha-scaled input distribution
    ``P(X_alpha = x) ~ P(X = x) ** alpha``.
    """
    alpha = _check_order(alpha)
    _check_dims(p, ch)
    if alpha == 1.0:
        return mutual_information(p, ch)
    probs = p.probs
    support = probs > 0
    log_scaled = alpha * np.log(probs[support])
    log_scaled -= logsumexp(log_scaled)
    with np.errstate(divide="ignore"):
        log_w = np.log(ch.matrix[support])
    # inner[y] = log sum_x P(X_alpha = x) P(y|x)^alpha
    inner = logsumexp(log_scaled[:, None] + alpha * log_w, axis=0)
    inner = inner[np.isfinite(inner)]
    value = alpha / (alpha - 1.0) * logsumexp(inner / alpha)
    return max(float(value), 0.0)
