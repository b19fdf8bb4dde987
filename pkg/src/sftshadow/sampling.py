"""Seeded random generators for points, pseudo-orbits and metric spaces."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .fullshift import FiniteMetricSpace
from .sft import Sft
from .shadowing import FinitePseudoOrbit, Segment, Specification, TsLimitPseudoOrbit
from .symbolic import EpBiSeq, Word


def _pick(rng: np.random.Generator, seq):
    return seq[int(rng.integers(len(seq)))]


def _tail(X: Sft, rng, v: int, forward: bool, free: int):
    """Random walk from ``v`` (excluded) until a vertex repeats.

    Returns ``(prefix, cycle)``: the walk visits ``prefix`` and then loops
    on ``cycle`` forever.
    """
    nbrs = X.successors if forward else X.predecessors
    walk = []
    cur = v
    for _ in range(free):
        cur = _pick(rng, nbrs[cur])
        walk.append(cur)
    seen = {}
    while True:
        cur = _pick(rng, nbrs[cur])
        if cur in seen:
            i = seen[cur]
            return walk[:i], walk[i:]
        seen[cur] = len(walk)
        walk.append(cur)


def random_point_through(X: Sft, rng, word: Sequence[int], start: int,
                         free: tuple[int, int] = (0, 3)) -> EpBiSeq:
    """Random point of ``X`` carrying ``word`` on ``[start, start + len(word))``."""
    word = tuple(word)
    if not word or not X.is_path(word):
        raise ValueError("word must be a nonempty walk")
    fpre, fcyc = _tail(X, rng, word[-1], True, int(rng.integers(free[0], free[1] + 1)))
    bpre, bcyc = _tail(X, rng, word[0], False, int(rng.integers(free[0], free[1] + 1)))
    left = tuple(reversed(bcyc))
    center = tuple(reversed(bpre)) + word + tuple(fpre)
    return EpBiSeq(left, center, tuple(fcyc), start - len(bpre))


def random_point(X: Sft, rng, radius: int = 3, free: tuple[int, int] = (0, 3)) -> EpBiSeq:
    v = int(rng.integers(X.n))
    return random_point_through(X, rng, (v,), int(rng.integers(-radius, radius + 1)), free)


def random_tslimit(X: Sft, rng, max_m: int = 3) -> TsLimitPseudoOrbit:
    m = int(rng.integers(1, max_m + 1))
    a = random_point(X, rng)
    b = random_point(X, rng)
    middle = tuple(random_point(X, rng) for _ in range(2 * m - 1))
    return TsLimitPseudoOrbit(a, b, middle, m)


def random_finite_pseudo_orbit(X: Sft, rng, length: int, k: int) -> FinitePseudoOrbit:
    """``length`` points with every step error at most ``2^-k`` (``k >= 1``)."""
    pts = [random_point(X, rng)]
    for _ in range(length - 1):
        nxt = pts[-1].shift(1)
        pts.append(random_point_through(X, rng, nxt.word(-(k - 1), k), -(k - 1)))
    return FinitePseudoOrbit(tuple(pts))


def random_specification(X: Sft, rng, spacing: int, segments: tuple[int, int] = (2, 4),
                         max_len: int = 6, slack: int = 3) -> Specification:
    count = int(rng.integers(segments[0], segments[1] + 1))
    segs = []
    a = int(rng.integers(-5, 6))
    for _ in range(count):
        b = a + int(rng.integers(0, max_len))
        segs.append(Segment(a, b, random_point(X, rng)))
        a = b + spacing + int(rng.integers(0, slack + 1))
    return Specification(tuple(segs))


def random_metric_space(rng, n: int, denominator: int = 12) -> FiniteMetricSpace:
    """Shortest-path closure of random positive rational weights."""
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d[i][j] = d[j][i] = Fraction(int(rng.integers(1, denominator + 1)), denominator)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return FiniteMetricSpace.from_table(d)


def random_full_point(n: int, rng, max_period: int = 3, max_center: int = 4,
                      radius: int = 3) -> EpBiSeq:
    def word(lo, hi):
        return tuple(int(a) for a in rng.integers(0, n, int(rng.integers(lo, hi + 1))))

    return EpBiSeq(word(1, max_period), word(0, max_center), word(1, max_period),
                   int(rng.integers(-radius, radius + 1)))


def random_full_tslimit(n: int, rng, max_m: int = 4) -> TsLimitPseudoOrbit:
    m = int(rng.integers(1, max_m + 1))
    return TsLimitPseudoOrbit(random_full_point(n, rng), random_full_point(n, rng),
                              tuple(random_full_point(n, rng) for _ in range(2 * m - 1)), m)
