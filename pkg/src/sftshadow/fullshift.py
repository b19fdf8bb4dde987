"""Full shifts over finite metric spaces with the weighted sup metric.

Points of ``S^Z`` are :class:`~sftshadow.symbolic.EpBiSeq` over the point
indices ``0..n-1`` of a :class:`FiniteMetricSpace`.  The distance

    D(x, y) = sup_j d(x_j, y_j) / 2^|j|

is computed exactly as a :class:`~fractions.Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DecayFailure
from .shadowing import TsLimitPseudoOrbit
from .symbolic import BACKWARD, FORWARD, EpBiSeq, tail_sync

__all__ = [
    "FiniteMetricSpace", "DecayResult", "metric_D", "diagonal_shadow", "decay_margin", "verify_decay",
    "chain_bound", "product_space", "join_points", "split_point", "split_pseudo_orbit",
]


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A finite metric space of diameter at most 1.

    ``scale`` records the factor the input table was divided by.
    """

    table: tuple[tuple[Fraction, ...], ...]
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.table)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("distance table must be square and nonempty")
        for i in range(n):
            if rows[i][i] != 0:
                raise ValueError("d(x, x) must be 0")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("distance table must be symmetric")
                if i != j and rows[i][j] <= 0:
                    raise ValueError("distinct points must have positive distance")
                for k in range(n):
                    if rows[i][k] > rows[i][j] + rows[j][k]:
                        raise ValueError(f"triangle inequality fails for ({i}, {j}, {k})")
        if max(max(r) for r in rows) > 1:
            raise ValueError("diameter exceeds 1; use FiniteMetricSpace.from_table")
        object.__setattr__(self, "table", rows)

    @classmethod
    def from_table(cls, rows: Sequence[Sequence]) -> "FiniteMetricSpace":
        """Validate and rescale so that the diameter is at most 1."""
        rows = [[Fraction(v) for v in r] for r in rows]
        diam = max(max(r) for r in rows) if rows else Fraction(0)
        scale = diam if diam > 1 else Fraction(1)
        return cls(tuple(tuple(v / scale for v in r) for r in rows), scale)

    @property
    def n(self) -> int:
        return len(self.table)

    def d(self, a: int, b: int) -> Fraction:
        return self.table[a][b]

    @property
    def diameter(self) -> Fraction:
        return max(max(r) for r in self.table)


def metric_D(S: FiniteMetricSpace, x: EpBiSeq, y: EpBiSeq) -> Fraction:
    """Exact ``sup_j d(x_j, y_j) / 2^|j|``.

    The scan stops once the weight ``diam / 2^|j|`` cannot beat the best term
    seen, or once ``|j|`` passes the radius beyond which equal tails force
    equal sequences.
    """
    if x == y:
        return Fraction(0)
    diam = S.diameter
    radius = max(abs(min(x.s, y.s)) + math.lcm(len(x.left), len(y.left)),
                 abs(max(x.end, y.end)) + math.lcm(len(x.right), len(y.right))) + 1
    best = Fraction(0)
    for r in range(radius + 1):
        w = Fraction(1, 2 ** r)
        if best > 0 and diam * w <= best:
            break
        best = max(best, S.d(x[r], y[r]) * w, S.d(x[-r], y[-r]) * w)
    return best


def diagonal_shadow(t: TsLimitPseudoOrbit) -> EpBiSeq:
    """The point ``x_j = x^{(j)}_0``."""
    m = t.m

    def fn(j):
        return t.term(j)[0]

    return EpBiSeq.from_function(fn, min(-m + 1, t.left.s), max(m, t.right.end),
                                 len(t.left.left), len(t.right.right))


@dataclass(frozen=True)
class DecayResult:
    """``n_p``: least index with all step errors at ``|m| >= n_p`` below
    ``2^-(p+1)``.  ``minimal_n``: least index beyond which the tracing bound
    ``2^-p`` actually holds.  ``horizon``: the explicitly checked range."""

    p: int
    n_p: int
    minimal_n: int
    horizon: tuple[int, int]
    distances: dict


def decay_margin(p: int) -> int:
    """Extra indices past ``n_p`` after which the tracing bound is guaranteed.

    A chain from ``x^{(m)}_k`` back to ``x^{(m+k)}_0`` with ``k`` of the
    opposite sign to ``m`` runs over steps closer to the noisy middle:
    ``m+k .. m-1`` for ``m > 0``, ``m .. m+k-1`` for ``m < 0``.  For
    ``|k| >= p`` the weight ``2^-|k|`` alone suffices, so moving the
    threshold out by ``p - 1`` keeps every remaining chain on good steps.
    """
    return max(p - 1, 0)


def verify_decay(S: FiniteMetricSpace, t: TsLimitPseudoOrbit, x: EpBiSeq, p: int,
                 margin: int = 0) -> DecayResult:
    """Check ``D(sigma^m x, x^{(m)}) <= 2^-p`` for every ``|m| >= n_p + margin``.

    With ``margin=0`` this is the bound claimed with the step threshold
    ``n_p`` itself, which can fail for ``p >= 3``; ``decay_margin(p)`` gives
    a threshold that always holds.

    Indices beyond the horizon are covered by the tail bound: if ``x``
    agrees with ``right`` from index ``S_f`` on, then for ``m >= mc`` the
    distance is at most ``2^-(m - S_f + 1)``; symmetrically on the left.
    """
    if p < 1:
        raise ValueError("p must be positive")
    mc = t.m
    step_bound = Fraction(1, 2 ** (p + 1))
    bad = [abs(m) for m in range(-mc, mc)
           if metric_D(S, t.term(m).shift(1), t.term(m + 1)) > step_bound]
    n_p = max(bad) + 1 if bad else 0

    fwd = tail_sync(x, t.right, FORWARD)
    bwd = tail_sync(x, t.left, BACKWARD)
    if fwd is None or bwd is None:
        raise DecayFailure("candidate is not asymptotic to the pseudo-orbit tails")
    start = n_p + margin
    hi = max(mc, fwd.sync_index + p - 1, start)
    lo = -max(mc, bwd.sync_index + p - 1, start)

    bound = Fraction(1, 2 ** p)
    distances = {}
    for m in range(lo, hi + 1):
        d = metric_D(S, x.shift(m), t.term(m))
        distances[m] = d
        if abs(m) >= start and d > bound:
            raise DecayFailure(f"D(sigma^{m} x, x^({m})) = {d} exceeds 2^-{p}", m, d)
    over = [abs(m) for m, d in distances.items() if d > bound]
    minimal_n = max(over) + 1 if over else 0
    return DecayResult(p, n_p, minimal_n, (lo, hi), distances)


def chain_bound(S: FiniteMetricSpace, t: TsLimitPseudoOrbit, m: int, k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the telescoping triangle inequality

    ``d(x_0^{(m+k)}, x_k^{(m)}) <= sum of one-step discrepancies``

    for ``k`` positive or negative.  Returns ``(lhs, rhs)``.
    """
    def term(i, j):
        return t.term(i)[j]

    lhs = S.d(term(m + k, 0), term(m, k))
    if k > 0:
        rhs = sum((S.d(term(m + k - j, j), term(m + k - j - 1, j + 1)) for j in range(k)),
                  Fraction(0))
    elif k < 0:
        rhs = sum((S.d(term(m + k + j, -j), term(m + k + j + 1, -j - 1)) for j in range(-k)),
                  Fraction(0))
    else:
        rhs = Fraction(0)
    return lhs, rhs


# -- finite products -------------------------------------------------------


def product_space(S1: FiniteMetricSpace, S2: FiniteMetricSpace) -> FiniteMetricSpace:
    """``S1 x S2`` with ``max(d1 / 2, d2 / 4)``; point ``(a, b)`` is ``a * n2 + b``."""
    n2 = S2.n
    rows = [[max(S1.d(a1, b1) / 2, S2.d(a2, b2) / 4)
             for b1 in range(S1.n) for b2 in range(n2)]
            for a1 in range(S1.n) for a2 in range(n2)]
    return FiniteMetricSpace(tuple(tuple(r) for r in rows))


def join_points(x1: EpBiSeq, x2: EpBiSeq, n2: int) -> EpBiSeq:
    lo, hi = min(x1.s, x2.s), max(x1.end, x2.end)
    return EpBiSeq.from_function(lambda i: x1[i] * n2 + x2[i], lo, hi,
                                 math.lcm(len(x1.left), len(x2.left)),
                                 math.lcm(len(x1.right), len(x2.right)))


def split_point(z: EpBiSeq, n2: int) -> tuple[EpBiSeq, EpBiSeq]:
    args = (z.s, z.end, len(z.left), len(z.right))
    return (EpBiSeq.from_function(lambda i: z[i] // n2, *args),
            EpBiSeq.from_function(lambda i: z[i] % n2, *args))


def split_pseudo_orbit(t: TsLimitPseudoOrbit, n2: int) -> tuple[TsLimitPseudoOrbit, TsLimitPseudoOrbit]:
    l1, l2 = split_point(t.left, n2)
    r1, r2 = split_point(t.right, n2)
    mids = [split_point(q, n2) for q in t.middle]
    return (TsLimitPseudoOrbit(l1, r1, tuple(a for a, _ in mids), t.m),
            TsLimitPseudoOrbit(l2, r2, tuple(b for _, b in mids), t.m))
