"""
Two-sided limit shadowing with a gap
====================================

On a mixing shift every two-sided limit pseudo-orbit is traced with gap
0.  On a periodic cycle the phase of the forward tail may disagree with
the backward tail; the gap absorbs the mismatch.
"""

import numpy as np

from sftshadow import (EpBiSeq, TsLimitPseudoOrbit, generate, minimal_gap,
                       two_sided_limit_shadow, verify_two_sided)
from sftshadow.oracle import EnumBounds, brute_shadow_search
from sftshadow.sampling import random_tslimit

X = generate("pq", 3, 4)
t = random_tslimit(X, np.random.default_rng(4))
g = two_sided_limit_shadow(X, t)
print("X(3,4):", g.y, "K =", g.K, verify_two_sided(t, g.y, g.K))

# %%
# the two-point cycle: the pseudo-orbit jumps from one phase to the other
C = generate("cycle", 2)
a = EpBiSeq.periodic((0, 1))
t = TsLimitPseudoOrbit.from_tails(a, a.shift(1))
print("gap 0 by exhaustive search:", brute_shadow_search(C, t, 0, EnumBounds(2, 2, 0, 1)))
g = two_sided_limit_shadow(C, t)
print("synthesized:", g, "minimal gap", minimal_gap(C))

for N in range(1, 7):
    print(f"cycle{N}: minimal gap {minimal_gap(generate('cycle', N))}")
