"""Monte-Carlo simulation of the data-reconstruction game.

One trial draws a secret ``k`` from the prior, releases a mechanism output
``y`` and asks an adversary for a guess; the adversary wins if it recovers
``k`` exactly. Trials are processed in fixed-size blocks whose random streams
are keyed by ``(seed, block index)``, so a report depends only on the inputs
and the seed, never on how many worker threads ran the blocks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from scipy.stats import norm

from fano_privacy.fano import advantage_from_success
from fano_privacy.info_theory import Prior
from fano_privacy.mi_bounds import GaussianSpec, RrSpec, rr_channel

BLOCK_SIZE = 4096
Z95 = float(norm.ppf(0.975))

MechanismInstance = Union[RrSpec, GaussianSpec]

ADVERSARIES = ("map", "ml")


@dataclass(frozen=True)
class TrialReport:
    """Outcome of ``n_trials`` rounds of the reconstruction game.

    ``ci_low``/``ci_high`` bound the success rate (95% Wilson score
    interval); ``adv_ci_low``/``adv_ci_high`` are the same interval pushed
    through the advantage transform.
    """

    n_trials: int
    successes: int
    empirical_success: float
    empirical_advantage: float
    ci_low: float
    ci_high: float
    adv_ci_low: float
    adv_ci_high: float
    p_star: float
    seed: int
    adversary_name: str

    @property
    def success_stderr(self) -> float:
        return wilson_stderr(self.successes, self.n_trials)

    @property
    def advantage_stderr(self) -> float:
        return self.success_stderr / (1.0 - self.p_star)


def wilson_interval(successes: int, n: int, z: float = Z95) -> Tuple[float, float]:
    if n <= 0:
        raise ValueError("need at least one trial")
    if not 0 <= successes <= n:
        raise ValueError("successes must lie in [0, n]")
    phat = successes / n
    denom = 1.0 + z * z / n
    centre = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / n + z * z / (4 * n * n)) / denom
    lo, hi = max(centre - half, 0.0), min(centre + half, 1.0)
    # Guard against rounding at phat in {0, 1}
    return min(lo, phat), max(hi, phat)


def wilson_stderr(successes: int, n: int) -> float:
    """Half-width of the Wilson interval in units of z (one standard error)."""
    lo, hi = wilson_interval(successes, n, z=1.0)
    return 0.5 * (hi - lo)


# --- single-trial primitives ------------------------------------------------


def sample_secret(prior: Prior, rng: np.random.Generator, size: Optional[int] = None):
    """Draws secret indices (0-based) from ``prior``."""
    cdf = np.cumsum(prior.probs)
    cdf[-1] = 1.0
    u = rng.random(size)
    k = np.searchsorted(cdf, u, side="right")
    # zero-probability tail entries never win the search, but rounding can
    k = np.minimum(k, prior.M - 1)
    return int(k) if size is None else k


def run_rr(k, spec: RrSpec, rng: np.random.Generator):
    """Keeps ``k`` w.p. ``1 - q``; otherwise emits a uniform index (which may equal ``k``)."""
    k_arr = np.asarray(k)
    randomize = rng.random(k_arr.shape) < spec.q
    uniform = rng.integers(0, spec.M, size=k_arr.shape)
    y = np.where(randomize, uniform, k_arr)
    return int(y) if y.ndim == 0 else y


def run_gaussian(k, spec: GaussianSpec, rng: np.random.Generator) -> np.ndarray:
    """``e_k`` plus isotropic N(0, sigma^2) noise; shape ``(d,)`` or ``(n, d)``."""
    k_arr = np.asarray(k)
    noise = rng.standard_normal(k_arr.shape + (spec.d,))
    return spec.encodings[k_arr] + spec.sigma * noise


def map_adversary_rr(y, spec: RrSpec, prior: Prior, with_prior: bool = True):
    """``argmax_m P(Y=y | X=m) p_m``, lowest index on ties."""
    y_arr = np.asarray(y)
    lik = rr_channel(spec).matrix[:, y_arr]  # (M,) or (M, n)
    if with_prior:
        probs = prior.probs
        lik = lik * (probs if lik.ndim == 1 else probs[:, None])
    guess = np.argmax(lik, axis=0)
    return int(guess) if y_arr.ndim == 0 else guess


def map_adversary_gaussian(y, spec: GaussianSpec, with_prior: bool = True):
    """``argmax_m -||y - e_m||^2 / (2 sigma^2) [+ log p_m]``, lowest index on ties."""
    y_arr = np.asarray(y, dtype=float)
    single = y_arr.ndim == 1
    if single:
        y_arr = y_arr[None, :]
    if y_arr.ndim != 2 or y_arr.shape[1] != spec.d:
        raise ValueError(f"output must have dimension d = {spec.d}")
    sq = ((y_arr[:, None, :] - spec.encodings[None, :, :]) ** 2).sum(axis=2)
    score = -sq / (2.0 * spec.sigma**2)
    if with_prior:
        with np.errstate(divide="ignore"):
            score = score + np.log(spec.prior.probs)[None, :]
    guess = np.argmax(score, axis=1)
    return int(guess[0]) if single else guess


# --- the game --------------------------------------------------------------


def trial_seed_sequence(seed: int, block: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(int(seed), spawn_key=(0, int(block)))


def _run_block(mech: MechanismInstance, adversary: str, prior: Prior,
               seed: int, block: int, n: int) -> int:
    rng = np.random.default_rng(trial_seed_sequence(seed, block))
    k = sample_secret(prior, rng, size=n)
    with_prior = adversary == "map"
    if isinstance(mech, RrSpec):
        y = run_rr(k, mech, rng)
        guess = map_adversary_rr(y, mech, prior, with_prior=with_prior)
    else:
        y = run_gaussian(k, mech, rng)
        guess = map_adversary_gaussian(y, mech, with_prior=with_prior)
    return int(np.count_nonzero(guess == k))


def run_game(
    mech: MechanismInstance,
    adversary: str = "map",
    prior: Optional[Prior] = None,
    n_trials: int = 100_000,
    seed: int = 0,
    workers: int = 1,
) -> TrialReport:
    """Plays ``n_trials`` rounds and reports the empirical success and advantage.

    Args:
        mech: Randomized-response or Gaussian mechanism.
        adversary: ``"map"`` (posterior maximizer, uses the prior) or ``"ml"``
            (likelihood maximizer, ignores the prior).
        prior: Distribution of the secret; defaults to the Gaussian spec's prior
            or to uniform for randomized response.
        n_trials: Number of rounds.
        seed: Base seed; block ``b`` uses the stream keyed by ``(seed, b)``.
        workers: Threads used to run blocks. Does not affect the result.
    """
    if adversary not in ADVERSARIES:
        raise ValueError(f"unknown adversary {adversary!r}; choose from {ADVERSARIES}")
    n_trials = int(n_trials)
    if n_trials < 1:
        raise ValueError("n_trials must be >= 1")
    if prior is None:
        prior = mech.prior if isinstance(mech, GaussianSpec) else Prior.uniform(mech.M)
    if prior.M != mech.M:
        raise ValueError(f"prior has M = {prior.M} but mechanism has M = {mech.M}")
    if isinstance(mech, GaussianSpec) and prior != mech.prior:
        mech = GaussianSpec(mech.encodings, mech.sigma, prior)

    sizes = [min(BLOCK_SIZE, n_trials - s) for s in range(0, n_trials, BLOCK_SIZE)]
    jobs = [(mech, adversary, prior, seed, b, n) for b, n in enumerate(sizes)]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(lambda job: _run_block(*job), jobs))
    else:
        counts = [_run_block(*job) for job in jobs]
    successes = sum(counts)

    success = successes / n_trials
    lo, hi = wilson_interval(successes, n_trials)
    p_star = prior.p_star
    return TrialReport(
        n_trials=n_trials,
        successes=successes,
        empirical_success=success,
        empirical_advantage=advantage_from_success(success, p_star, clamp=False),
        ci_low=lo,
        ci_high=hi,
        adv_ci_low=advantage_from_success(lo, p_star, clamp=False),
        adv_ci_high=advantage_from_success(hi, p_star, clamp=False),
        p_star=p_star,
        seed=int(seed),
        adversary_name=adversary,
    )
