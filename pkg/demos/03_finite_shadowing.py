"""
Shadowing finite pseudo-orbits
==============================

A delta-pseudo-orbit in a shift of finite type is traced by the point
that reads the centre coordinate of each term.
"""

import numpy as np

from sftshadow import Dyadic, generate, shadow_finite, validate_delta
from sftshadow.sampling import random_finite_pseudo_orbit

rng = np.random.default_rng(0)
X = generate("golden")
for k in (1, 3, 5):
    po = random_finite_pseudo_orbit(X, rng, 8, k)
    y, eps = shadow_finite(X, po)
    print(f"delta {validate_delta(po)} (<= {Dyadic(k)})  traced within {eps}  by {y}")
