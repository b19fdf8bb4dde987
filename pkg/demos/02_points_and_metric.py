"""
Eventually periodic points
==========================

Points are stored as left period, centre word and right period.  Every
description is reduced to a canonical one, so equality is exact.
"""

from sftshadow import BACKWARD, FORWARD, EpBiSeq, dist, tail_sync

x = EpBiSeq((0,), (1, 1, 0), (0, 1), -1)
same = EpBiSeq((0, 0), (0, 1, 1, 0, 0, 1), (0, 1, 0, 1), -2)
print(x, same, x == same)

# sigma moves every coordinate one step left
print([x[i] for i in range(-3, 6)])
print([x.shift(1)[i] for i in range(-3, 6)])

# the metric is 2^-(first disagreement radius)
y = EpBiSeq((0,), (1, 1, 1), (0, 1), -1)
print("dist", dist(x, y))

# x and y share both tails: they lie in each other's stable and unstable sets
print(tail_sync(x, y, FORWARD), tail_sync(x, y, BACKWARD))
