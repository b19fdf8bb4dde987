"""
Structure of a shift of finite type
===================================

Build the two-loop shift X(3,4), read off its cyclic structure, entropy
and transition length, and compare with a periodic cycle.
"""

import math

from sftshadow import entropy, generate, path_spectrum, transition_length
from sftshadow.sft import connect_path

X = generate("pq", 3, 4)
dec = X.decomposition
print(X, "period", dec.period, "mixing", dec.mixing)

# loops of length 3 and 4 share vertex 0, so the spectral radius solves
# lambda^4 = lambda + 1
print("entropy      ", entropy(X))
print("transition T ", transition_length(X))

# closed walks at 0 have lengths 0, 3, 4 and every n >= 6; T is the
# bound that works for all pairs at once
spec = path_spectrum(X, 0, 0)
print("lengths below threshold", sorted(spec.lengths_below), "then all n >=", spec.threshold)
print("a walk of length 12:", connect_path(X, 0, 0, 12))

# %%
# A cycle is transitive but not mixing; its symbols split into classes
C = generate("cycle", 3)
print(C.decomposition.classes(), "entropy", entropy(C))
print("golden mean", entropy(generate("golden")), "log phi", math.log((1 + 5 ** 0.5) / 2))
