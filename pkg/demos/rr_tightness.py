"""Randomized response: the Fano bound is attained by the MAP adversary.

For a uniform prior the MAP guess is simply the released value, its error
rate is q - q/M, and Fano's inequality holds with equality. This script
prints the exact-MI bound next to a simulated attack, together with the
looser bounds that only know the mechanism is eps-DP.
"""

import math

from fano_privacy import (
    Prior,
    RdpCurve,
    RrSpec,
    fano_advantage_bound,
    mi_from_rdp,
    rero_baseline_bound,
    rr_epsilon_dp,
    rr_exact_mi,
    run_game,
)

M = 10
TRIALS = 100_000
prior = Prior.uniform(M)

print(f"{'q':>4} {'eps_DP':>7} {'I(X;Y)':>7} {'exact':>7} {'empirical':>10} {'eps-DP Fano':>12} {'ReRo':>7}")
for i in range(1, 10):
    q = i / 10
    spec = RrSpec(q, M)
    eps = rr_epsilon_dp(spec)
    mi = rr_exact_mi(spec, prior)
    exact = fano_advantage_bound(mi, prior).advantage
    rep = run_game(spec, "map", prior, TRIALS, seed=0)

    # eps-DP gives (alpha, eps)-RDP at every order, hence I(X;Y) <= eps
    curve = RdpCurve.constant(eps)
    loose = fano_advantage_bound(mi_from_rdp(curve, 1.0), prior).advantage
    rero = rero_baseline_bound(curve, M).advantage
    print(f"{q:4.1f} {eps:7.3f} {mi.value:7.4f} {exact:7.4f} {rep.empirical_advantage:10.4f} {loose:12.4f} {rero:7.4f}")

print()
print("The exact column tracks the simulation to Monte-Carlo noise (1 - q on the")
print("advantage scale). Knowing only eps_DP costs a lot: for large q the order-1")
print("bound grows like sqrt(eps) and falls behind the ReRo baseline, which")
print("approaches exp(eps)/M.")
print(f"log M = {math.log(M):.3f}; the eps-DP bounds are vacuous whenever eps_DP >= log M.")
