"""
Average shadowing at finite horizons
====================================

Hold 0^inf for one step, 1^inf for two, 0^inf for four, and so on.  The
seams become rare, so the Cesaro average of step errors decays like
J / 2^J, and the diagonal point traces the sequence well on average.
"""

from sftshadow import average_report
from sftshadow.shadowing import block_pseudo_orbit, diagonal_point

lengths = [2 ** j for j in range(14)]
for J in range(4, 13, 2):
    n = 2 ** J
    pts = block_pseudo_orbit(lengths, horizon=n + 1)
    rep = average_report(pts, diagonal_point(pts), n)
    print(f"J={J:2d}  step average {rep.step_average}  tracing {float(rep.final_tracing):.5f}")
