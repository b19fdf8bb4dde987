"""
Chains and specification
========================

Transitivity gives delta-chains between any two points; mixing gives
single orbits that trace well-spaced orbit segments, even periodic ones.
"""

from sftshadow import (Dyadic, EpBiSeq, Segment, Specification, chain_connect, dist, generate,
                       shadow_specification, spec_spacing, validate_delta)

X = generate("pq", 3, 4)
x = EpBiSeq.periodic((0, 1, 2))
y = EpBiSeq((3, 4, 5, 0), (1, 2), (0, 3, 4, 5), 2)
po = chain_connect(X, x, y, Dyadic(4))
print(len(po), "points, step error", validate_delta(po), "ends exact:", po[0] == x and po[-1] == y)

# %%
eps = Dyadic(3)
L = spec_spacing(X, eps)
spec = Specification((Segment(0, 4, x), Segment(4 + L, 9 + L, y)))
z = shadow_specification(X, spec, eps, periodic=True)
print("spacing", L, "worst error", max(dist(z.shift(n), spec.P(n)) for n in spec.times()))
period = spec.segments[-1].b - spec.segments[0].a + L
print("periodic with period", period, z.shift(period) == z)
