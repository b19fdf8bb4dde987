"""
Full shift over a finite metric space
=====================================

The diagonal point x_j = x^(j)_0 traces a two-sided limit pseudo-orbit.
This script measures from which index the tracing error drops below
2^-p, next to the step threshold N_p.
"""

import numpy as np

from sftshadow import diagonal_shadow, verify_decay
from sftshadow.fullshift import decay_margin
from sftshadow.sampling import random_full_tslimit, random_metric_space

rng = np.random.default_rng(3)
S = random_metric_space(rng, 4)
t = random_full_tslimit(S.n, rng, max_m=4)
x = diagonal_shadow(t)
print("diagonal point", x)
for p in (1, 2, 3, 4):
    res = verify_decay(S, t, x, p, margin=decay_margin(p))
    print(f"p={p}: N_p={res.n_p}  tracing bound holds from {res.minimal_n}"
          f"  guaranteed from {res.n_p + decay_margin(p)}")
