import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fano_privacy.fano import (
    AdvantageBound,
    BoundAssertionError,
    advantage_from_success,
    best_generalized_fano,
    f_eps,
    fano_advantage_bound,
    generalized_fano_bound,
    rero_baseline_bound,
    rero_to_advantage,
)
from fano_privacy.info_theory import Prior, binary_entropy, entropy, renyi_entropy
from fano_privacy.mi_bounds import (
    BoundKind,
    MiBound,
    RdpCurve,
    RrSpec,
    gaussian_rdp_curve,
    mi_from_rdp,
    rr_exact_mi,
)

GRID_STEP = 1e-6


def scan_fano(eps, prior):
    """Dense grid scan: smallest grid t with f <= 0, computed without the library."""
    H = -sum(p * math.log(p) for p in prior.probs if p > 0)
    M = prior.M
    t = np.arange(0.0, 1.0 - 1.0 / M + GRID_STEP, GRID_STEP)
    t = t[t <= 1.0 - 1.0 / M]
    with np.errstate(divide="ignore", invalid="ignore"):
        ent = -np.nan_to_num(t * np.log(t)) - np.nan_to_num((1 - t) * np.log(1 - t))
    f = H - eps - ent - t * math.log(M - 1)
    idx = np.flatnonzero(f <= 0)
    return float(t[idx[0]]) if idx.size else 1.0 - 1.0 / M


def scan_generalized(eps, alpha, prior):
    """Grid scan of the order-alpha constraint with D_alpha written out term by term."""
    M = prior.M
    H_a = math.log(np.sum(prior.probs**alpha)) / (1 - alpha)
    t = np.arange(0.0, 1.0 - 1.0 / M + GRID_STEP, GRID_STEP)
    t = t[t <= 1.0 - 1.0 / M]
    a, b = 1 - 1 / M, 1 / M
    s = t**alpha * a ** (1 - alpha) + (1 - t) ** alpha * b ** (1 - alpha)
    f = H_a - eps - math.log(M) + np.log(s) / (alpha - 1)
    idx = np.flatnonzero(f <= 0)
    return float(t[idx[0]])


def random_prior(rng, M):
    return Prior(rng.dirichlet(np.ones(M) * rng.uniform(0.3, 3)), renormalize=True)


class TestAdvantage:
    def test_examples(self):
        assert advantage_from_success(0.3, 0.3) == 0.0
        assert advantage_from_success(1.0, 0.3) == 1.0
        assert advantage_from_success(0.55, 0.1) == pytest.approx(0.5, rel=1e-15)

    def test_unclamped(self):
        assert advantage_from_success(0.2, 0.4, clamp=False) == pytest.approx(-1 / 3)
        assert advantage_from_success(0.2, 0.4) == 0.0

    def test_rejects_p_star_one(self):
        with pytest.raises(ValueError):
            advantage_from_success(1.0, 1.0)
        with pytest.raises(ValueError):
            rero_to_advantage(0.5, 1.0)

    def test_rero_to_advantage(self):
        assert rero_to_advantage(0.1, 0.1) == 0.0
        assert rero_to_advantage(1.0, 0.1) == 1.0
        assert rero_to_advantage(0.485, 0.1) == pytest.approx(0.428, abs=5e-4)


class TestFEps:
    def test_endpoint_identity(self):
        for M in (2, 10, 1000):
            assert f_eps(1 - 1 / M, math.log(M), 0.0, M) == pytest.approx(0.0, abs=1e-13)

    def test_zero(self):
        assert f_eps(0.0, 1.7, 0.4, 5) == pytest.approx(1.3, abs=1e-15)

    def test_direct_value(self):
        val = f_eps(0.5, math.log(10), 0.0, 10)
        assert val == pytest.approx(math.log(10) - math.log(2) - 0.5 * math.log(9), rel=1e-15)
        assert val == pytest.approx(0.5108256237659907, rel=1e-14)

    def test_vectorized(self):
        t = np.array([0.0, 0.25, 0.5])
        np.testing.assert_allclose(f_eps(t, 2.0, 0.5, 4), [f_eps(x, 2.0, 0.5, 4) for x in t])


class TestFanoBound:
    def test_vacuous(self):
        b = fano_advantage_bound(MiBound(99.0), Prior.uniform(10))
        assert b.advantage == 1.0 and b.t_star == 0.0 and b.success_upper == 1.0

    @pytest.mark.parametrize("M", [2, 3, 10, 1000, 10**10])
    def test_zero_information(self, M):
        b = fano_advantage_bound(MiBound(0.0), Prior.uniform(M))
        # f_0 touches zero at 1 - 1/M without crossing (double root), so rounding
        # leaves a feasible band of width ~sqrt(machine eps) around it.
        assert b.t_star == pytest.approx(1 - 1 / M, abs=1e-7)
        assert b.advantage == pytest.approx(0.0, abs=1e-7)

    def test_rr_tight(self):
        mi = rr_exact_mi(RrSpec(0.5, 10), Prior.uniform(10))
        b = fano_advantage_bound(mi, Prior.uniform(10))
        assert b.t_star == pytest.approx(0.45, abs=1e-10)
        assert b.advantage == pytest.approx(0.5, abs=1e-10)
        assert b.method == "fano"
        assert b.info_bound == mi.value

    def test_requires_order_one(self):
        with pytest.raises(ValueError):
            fano_advantage_bound(MiBound(0.1, order=2.0, kind=BoundKind.RDP), Prior.uniform(3))

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_grid_scan(self, seed):
        rng = np.random.default_rng(seed)
        for _ in range(4):
            prior = random_prior(rng, int(rng.integers(2, 51)))
            eps = rng.uniform(0, entropy(prior))
            b = fano_advantage_bound(MiBound(eps), prior)
            assert abs(b.t_star - scan_fano(eps, prior)) <= 2e-6

    def test_monotone_in_eps(self):
        for prior in (Prior.uniform(10), Prior([0.367, 0.339, 0.294]), Prior([0.7, 0.1, 0.1, 0.1])):
            eps = np.linspace(0, entropy(prior) * 1.2, 200)
            adv = [fano_advantage_bound(MiBound(e), prior).advantage for e in eps]
            assert all(b >= a for a, b in zip(adv, adv[1:]))

    @pytest.mark.parametrize("M", [2, 10, 10**4, 10**10])
    def test_vacuity_wall(self, M):
        assert fano_advantage_bound(MiBound(math.log(M)), Prior.uniform(M)).advantage == 1.0
        assert fano_advantage_bound(MiBound(0.999 * math.log(M)), Prior.uniform(M)).advantage < 1.0

    @settings(max_examples=200, deadline=None)
    @given(st.integers(2, 40), st.floats(0.0, 10.0), st.data())
    def test_output_clamping(self, M, eps, data):
        w = data.draw(st.lists(st.floats(0.01, 1.0), min_size=M, max_size=M))
        prior = Prior(w, renormalize=True)
        b = fano_advantage_bound(MiBound(eps), prior)
        assert 0.0 <= b.advantage <= 1.0
        assert 0.0 <= b.t_star <= 1 - 1 / M
        expected = min(max((b.success_upper - b.p_star) / (1 - b.p_star), 0.0), 1.0)
        assert b.advantage == pytest.approx(expected, abs=1e-15)

    def test_constraint_holds_at_t_star(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            prior = random_prior(rng, int(rng.integers(2, 30)))
            H = entropy(prior)
            eps = rng.uniform(0, H)
            b = fano_advantage_bound(MiBound(eps), prior)
            assert f_eps(b.t_star, H, eps, prior.M) <= 0
            assert b.t_star < 1e-11 or f_eps(b.t_star - 1e-11, H, eps, prior.M) > -1e-9


class TestGeneralizedFano:
    def test_alpha_one_identical(self):
        prior = Prior([0.5, 0.3, 0.2])
        a = fano_advantage_bound(MiBound(0.3), prior)
        b = generalized_fano_bound(MiBound(0.3), prior)
        assert abs(a.t_star - b.t_star) <= 1e-9

    def test_vacuous(self):
        prior = Prior([0.75, 0.25])
        ib = MiBound(renyi_entropy(prior, 2.0), order=2.0, kind=BoundKind.RDP)
        assert generalized_fano_bound(ib, prior).advantage == 1.0

    def test_m10_alpha2_eps1_against_scan(self):
        prior = Prior.uniform(10)
        b = generalized_fano_bound(MiBound(1.0, order=2.0, kind=BoundKind.RDP), prior)
        assert abs(b.t_star - scan_generalized(1.0, 2.0, prior)) <= 2e-6
        assert b.method == "generalized-fano(2)" and b.alpha == 2.0

    @pytest.mark.parametrize("seed", range(4))
    def test_random_against_scan(self, seed):
        rng = np.random.default_rng(100 + seed)
        for _ in range(3):
            prior = random_prior(rng, int(rng.integers(2, 30)))
            alpha = float(rng.choice([1.3, 2.0, 5.0, 20.0]))
            eps = rng.uniform(0, renyi_entropy(prior, alpha))
            b = generalized_fano_bound(MiBound(eps, order=alpha, kind=BoundKind.RDP), prior)
            assert abs(b.t_star - scan_generalized(eps, alpha, prior)) <= 2e-6


class TestBestGeneralizedFano:
    def test_zero_curve(self):
        b = best_generalized_fano(RdpCurve.constant(0.0), Prior.uniform(10))
        assert b.advantage == pytest.approx(0.0, abs=1e-10)

    def test_grid_one_is_plain_fano(self):
        curve = gaussian_rdp_curve(math.sqrt(2), 1.0)
        prior = Prior.uniform(10)
        b = best_generalized_fano(curve, prior, [1.0])
        plain = fano_advantage_bound(mi_from_rdp(curve, 1.0), prior)
        assert abs(b.advantage - plain.advantage) <= 1e-9

    def test_per_alpha_recompute(self):
        curve = gaussian_rdp_curve(math.sqrt(2), 1.0)
        prior = Prior.uniform(10)
        grid = [1.0, 1.5, 2.0, 4.0, 8.0]
        each = {}
        for a in grid:
            if a == 1.0:
                t = scan_fano(curve(a), prior)
            else:
                t = scan_generalized(curve(a), a, prior)
            each[a] = (1 - t - 0.1) / 0.9
        best = best_generalized_fano(curve, prior, grid)
        assert best.advantage == pytest.approx(min(each.values()), abs=3e-6)
        assert best.alpha == min(each, key=each.get)

    def test_rejects_bad_grid(self):
        with pytest.raises(ValueError):
            best_generalized_fano(RdpCurve.constant(0.0), Prior.uniform(3), [])
        with pytest.raises(ValueError):
            best_generalized_fano(RdpCurve.constant(0.0), Prior.uniform(3), [0.5])

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.0, 3.0), st.integers(2, 100))
    def test_never_worse_than_alpha_one(self, slope, M):
        curve = RdpCurve.linear(slope)
        prior = Prior.uniform(M)
        best = best_generalized_fano(curve, prior)
        assert best.advantage <= fano_advantage_bound(mi_from_rdp(curve, 1.0), prior).advantage + 1e-9


class TestRero:
    def test_zero_curve(self):
        b = rero_baseline_bound(RdpCurve.constant(0.0), 10)
        assert b.advantage == pytest.approx(0.0, abs=1e-12)
        assert b.success_upper == pytest.approx(0.1, rel=1e-12)

    def test_constant_log11_clamps(self):
        b = rero_baseline_bound(RdpCurve.constant(math.log(11)), 10)
        assert b.success_upper == 1.0 and b.advantage == 1.0

    def test_gaussian_closed_form(self):
        delta, sigma, M = math.sqrt(2), 1.5, 10
        slope = delta**2 / (2 * sigma**2)
        # d/da [(1 - 1/a)(slope a - log M)] = slope - log M / a^2 = 0
        a_star = math.sqrt(math.log(M) / slope)
        success = math.exp((1 - 1 / a_star) * (slope * a_star - math.log(M)))
        b = rero_baseline_bound(gaussian_rdp_curve(delta, sigma), M)
        assert b.alpha == pytest.approx(a_star, rel=1e-6)
        assert a_star == pytest.approx(2.276, abs=5e-4)
        assert b.success_upper == pytest.approx(success, rel=1e-10)
        assert b.success_upper == pytest.approx(0.485, abs=5e-4)
        assert b.advantage == pytest.approx(0.428, abs=5e-4)

    def test_rejects_non_uniform(self):
        with pytest.raises(ValueError):
            rero_baseline_bound(RdpCurve.constant(1.0), 3, Prior([0.5, 0.3, 0.2]))

    def test_constant_curve_takes_large_order_limit(self):
        eps = 1.0
        b = rero_baseline_bound(RdpCurve.constant(eps), 10)
        assert b.success_upper == pytest.approx(math.exp(eps) / 10, rel=1e-12)


def test_bound_type_accessors():
    b = AdvantageBound(0.2, 0.8, 0.5, 0.6, "fano", {"eps": 0.3, "alpha": 1.0})
    assert b.alpha == 1.0 and b.info_bound == 0.3


def test_endpoint_assertion():
    from fano_privacy.fano import _solve

    with pytest.raises(BoundAssertionError):
        _solve(lambda t: -1.0, Prior.uniform(3), "x", {}, prescan=False)
    with pytest.raises(BoundAssertionError):
        _solve(lambda t: 1.0, Prior.uniform(3), "x", {}, prescan=False)
