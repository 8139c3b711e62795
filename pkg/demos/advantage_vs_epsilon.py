"""Advantage bound as a function of the MI budget, for several M.

The bound reaches 1 exactly when eps = log M and is smaller for larger M at
any fixed eps. Measured in units of log M the curves get closer as M grows,
but only slowly: the leftover binary-entropy term is O(1 / log M).
"""

import math

import numpy as np

from fano_privacy import MiBound, Prior, fano_advantage_bound

MS = (2, 10, 10**4, 10**10)
EPS = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0)

print("advantage bound at fixed eps (nats)")
print(f"{'eps':>6} " + " ".join(f"{'M=%g' % M:>9}" for M in MS))
for eps in EPS:
    row = [fano_advantage_bound(MiBound(eps), Prior.uniform(M)).advantage for M in MS]
    print(f"{eps:6.1f} " + " ".join(f"{v:9.4f}" for v in row))

print()
print("advantage bound at eps = c log M")
big = (10**3, 10**6, 10**12, 10**50)
print(f"{'c':>6} " + " ".join(f"{'M=%g' % M:>9}" for M in big))
for c in (0.25, 0.5, 0.75, 0.9, 1.0):
    row = [fano_advantage_bound(MiBound(c * math.log(M)), Prior.uniform(M)).advantage for M in big]
    print(f"{c:6.2f} " + " ".join(f"{v:9.4f}" for v in row))
print()
print(f"limit as M -> infinity at c = 0.5: {1 - 0.5:.4f}; the columns above approach it slowly")
