"""Pseudo-orbits and constructive shadowing on shifts of finite type.

Two-sided limit pseudo-orbits are represented in "eventually orbit"
form: the terms ``x_i`` are ``sigma^i(a)`` for ``i <= -m``,
``sigma^i(b)`` for ``i >= m`` and a finite list in between.  A point
``y`` shadows such a sequence with gap ``K`` when ``y`` is backward
asymptotic to ``a`` and ``sigma^K(y)`` is forward asymptotic to ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (DeltaTooLarge, HorizonTooLong, NoPath, NotMixing,
                     NotTransitive, SpacingTooSmall)
from .sft import Sft, connect_path, member, transition_length
from .symbolic import (BACKWARD, FORWARD, ZERO, Dyadic, EpBiSeq, dist,
                       tail_sync)

__all__ = [
    "FinitePseudoOrbit", "TsLimitPseudoOrbit", "GapShadow", "Segment", "Specification",
    "AverageReport", "validate_delta", "diagonal_point", "shadow_finite",
    "connect_heteroclinic", "two_sided_limit_shadow", "verify_two_sided",
    "chain_connect", "spec_spacing", "shadow_specification", "average_report",
    "minimal_gap", "gap_representative", "orbit_offset", "block_pseudo_orbit",
]


@dataclass(frozen=True)
class FinitePseudoOrbit:
    points: tuple[EpBiSeq, ...]
    delta: Optional[Dyadic] = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if len(self.points) < 1:
            raise ValueError("a pseudo-orbit needs at least one point")
        if self.delta is not None and validate_delta(self.points) > self.delta:
            raise ValueError(f"step error exceeds the claimed bound {self.delta}")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


@dataclass(frozen=True)
class TsLimitPseudoOrbit:
    """Terms ``x_i``: ``sigma^i(left)`` for ``i <= -m``, ``sigma^i(right)`` for
    ``i >= m`` and ``middle[i + m - 1]`` for ``|i| < m``."""

    left: EpBiSeq
    right: EpBiSeq
    middle: tuple[EpBiSeq, ...] = ()
    m: int = 1

    def __post_init__(self):
        object.__setattr__(self, "middle", tuple(self.middle))
        if self.m < 1:
            raise ValueError("cut m must be positive")
        if len(self.middle) != 2 * self.m - 1:
            raise ValueError(f"middle must hold 2m - 1 = {2 * self.m - 1} points")

    @classmethod
    def from_tails(cls, left: EpBiSeq, right: EpBiSeq, m: int = 1,
                   middle: Optional[Sequence[EpBiSeq]] = None) -> "TsLimitPseudoOrbit":
        """Default middle: ``sigma^i(left)`` for ``i < 0``, ``sigma^i(right)`` for ``i >= 0``."""
        if middle is None:
            middle = [left.shift(i) if i < 0 else right.shift(i) for i in range(-m + 1, m)]
        return cls(left, right, tuple(middle), m)

    def term(self, i: int) -> EpBiSeq:
        if i <= -self.m:
            return self.left.shift(i)
        if i >= self.m:
            return self.right.shift(i)
        return self.middle[i + self.m - 1]

    def points(self):
        yield self.left
        yield self.right
        yield from self.middle


@dataclass(frozen=True)
class GapShadow:
    y: EpBiSeq
    K: int


@dataclass(frozen=True)
class Segment:
    a: int
    b: int
    point: EpBiSeq

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError(f"empty interval [{self.a}, {self.b}]")


@dataclass(frozen=True)
class Specification:
    """Orbit segments ``P(t) = sigma^t(point)`` for ``t`` in ``[a, b]``."""

    segments: tuple[Segment, ...]

    def __post_init__(self):
        segs = tuple(s if isinstance(s, Segment) else Segment(*s) for s in self.segments)
        if not segs:
            raise ValueError("a specification needs at least one segment")
        for s1, s2 in zip(segs, segs[1:]):
            if s2.a <= s1.b:
                raise ValueError("intervals must be disjoint and increasing")
        object.__setattr__(self, "segments", segs)

    def P(self, t: int) -> EpBiSeq:
        for seg in self.segments:
            if seg.a <= t <= seg.b:
                return seg.point.shift(t)
        raise KeyError(t)

    def times(self):
        for seg in self.segments:
            yield from range(seg.a, seg.b + 1)

    def spacing(self) -> Optional[int]:
        """Least gap ``a_{i+1} - b_i``, or ``None`` for one segment."""
        gaps = [s2.a - s1.b for s1, s2 in zip(self.segments, self.segments[1:])]
        return min(gaps) if gaps else None


def _points(po) -> tuple[EpBiSeq, ...]:
    return tuple(po.points) if isinstance(po, FinitePseudoOrbit) else tuple(po)


def validate_delta(points: Sequence[EpBiSeq]) -> Dyadic:
    """``max_i dist(sigma x_i, x_{i+1})``."""
    pts = _points(points)
    return max((dist(p.shift(1), q) for p, q in zip(pts, pts[1:])), default=ZERO)


def diagonal_point(points: Sequence[EpBiSeq]) -> EpBiSeq:
    """``y_j = x^{(j)}_0`` on ``0..m``, continued by the first and last points."""
    pts = _points(points)
    first, last = pts[0], pts[-1]
    m = len(pts) - 1

    def fn(j):
        if j < 0:
            return first[j]
        if j > m:
            return last[j - m]
        return pts[j][0]

    return EpBiSeq.from_function(fn, min(0, first.s), max(m + 1, m + last.end),
                                 len(first.left), len(last.right))


def shadow_finite(X: Sft, po) -> tuple[EpBiSeq, Dyadic]:
    """Shadow a finite pseudo-orbit with step error at most ``2^-1``.

    The shadow is the diagonal point; its tracing error never exceeds the
    step error of ``po``.
    """
    pts = _points(po)
    if not all(member(X, p) for p in pts):
        raise ValueError("every pseudo-orbit point must lie in the shift")
    delta = validate_delta(pts)
    if delta > Dyadic(1):
        raise DeltaTooLarge(f"step error {delta} exceeds 2^-1")
    y = diagonal_point(pts)
    eps = max(dist(y.shift(i), p) for i, p in enumerate(pts))
    return y, eps


def gap_representative(r: int, N: int) -> int:
    """The ``K = r (mod N)`` of least ``|K|``, positive on ties."""
    r %= N
    return r - N if 2 * r > N else r


def _require_transitive(X: Sft):
    dec = X.decomposition
    if not dec.transitive:
        raise NotTransitive(f"{X.name or 'shift'} is not transitive")
    return dec


def connect_heteroclinic(X: Sft, x: EpBiSeq, y: EpBiSeq) -> tuple[EpBiSeq, int]:
    """A point ``z`` backward asymptotic to ``y`` and forward asymptotic to
    ``sigma^{-K}(x)``, with ``K`` the least-magnitude value permitted by the
    cyclic classes."""
    dec = _require_transitive(X)
    if not (member(X, x) and member(X, y)):
        raise ValueError("both points must lie in the shift")
    N = dec.period
    K = gap_representative(dec.class_of[x[0]] - dec.class_of[y[0]], N)
    cap = 4 * X.n * X.n + 4 * N + abs(K) + 4
    for M in range(cap):
        try:
            path = connect_path(X, y[-M], x[M - K], 2 * M)
        except NoPath:
            continue
        break
    else:
        raise AssertionError("connecting walk not found below the search cap")

    def fn(i):
        if i <= -M:
            return y[i]
        if i >= M:
            return x[i - K]
        return path[i + M]

    z = EpBiSeq.from_function(fn, min(-M, y.s), max(M + 1, x.end + K),
                              len(y.left), len(x.right))
    return z, K


def two_sided_limit_shadow(X: Sft, t: TsLimitPseudoOrbit) -> GapShadow:
    """Shadow ``t`` with the smallest gap allowed by the cyclic classes.

    On a mixing shift the gap is always 0.
    """
    if not all(member(X, p) for p in t.points()):
        raise ValueError("pseudo-orbit leaves the shift")
    z, K = connect_heteroclinic(X, t.right, t.left)
    return GapShadow(z, K)


def verify_two_sided(t: TsLimitPseudoOrbit, y: EpBiSeq, K: int) -> bool:
    """Exact check that ``y`` two-sided limit shadows ``t`` with gap ``K``."""
    return (tail_sync(y, t.left, BACKWARD) is not None
            and tail_sync(y.shift(K), t.right, FORWARD) is not None)


def minimal_gap(X: Sft) -> int:
    """Least ``G`` such that every two-sided limit pseudo-orbit has a shadow
    with ``|K| <= G``."""
    N = _require_transitive(X).period
    return max(abs(gap_representative(r, N)) for r in range(N))


def orbit_offset(x: EpBiSeq, y: EpBiSeq) -> Optional[int]:
    """Least ``n >= 1`` with ``sigma^n(x) == y``, if any."""
    if x.is_periodic:
        p = len(x.left)
        return next((n for n in range(1, p + 1) if x.shift(n) == y), None)
    n = x.s - y.s
    if n >= 1 and x.shift(n) == y:
        return n
    return None


def _log2_inverse(delta: Dyadic) -> int:
    if delta.is_zero:
        raise ValueError("delta must be positive")
    return delta.exponent


def chain_connect(X: Sft, x: EpBiSeq, y: EpBiSeq, delta: Dyadic,
                  max_orbit: int = 4096) -> FinitePseudoOrbit:
    """A finite pseudo-orbit from exactly ``x`` to exactly ``y`` with every
    step error strictly below ``delta``.

    Layout: ``x, ..., sigma^{M1-1} x, sigma^{-M} z, ..., sigma^{M-1} z,
    sigma^{-M2} y, ..., y`` where ``z`` joins the periodic orbit that
    ``x`` tends to with the periodic orbit ``y`` comes from.
    """
    dec = _require_transitive(X)
    if not (member(X, x) and member(X, y)):
        raise ValueError("both points must lie in the shift")
    k = _log2_inverse(delta)
    if k < 1:
        raise DeltaTooLarge("delta must be at most 2^-1")

    n = orbit_offset(x, y)
    if n is not None and n <= max_orbit:
        return FinitePseudoOrbit(tuple(x.shift(i) for i in range(n + 1)))

    # omega-limit orbit of x and alpha-limit orbit of y
    px = EpBiSeq.periodic(x.right, x.end)
    qy = EpBiSeq.periodic(y.left, y.s)
    z, K = connect_heteroclinic(X, qy, px)
    P, Q = len(px.left), len(qy.left)

    A_x = tail_sync(x, px, FORWARD).sync_index
    B_z = tail_sync(z, px, BACKWARD).sync_index
    C_z = tail_sync(z, qy.shift(-K), FORWARD).sync_index
    D_y = tail_sync(y, qy, BACKWARD).sync_index

    M = max(1, k + B_z, k + C_z)
    M1 = max(1, k + A_x)
    M1 += (-M - M1) % P
    M2 = max(0, k + D_y)
    M2 += (K - M - M2) % Q

    pts = [x.shift(i) for i in range(M1)]
    pts += [z.shift(i) for i in range(-M, M)]
    pts += [y.shift(i) for i in range(-M2, 1)]
    po = FinitePseudoOrbit(tuple(pts))
    assert validate_delta(po) < delta
    return po


# -- specification ---------------------------------------------------------


def spec_spacing(X: Sft, eps: Dyadic) -> int:
    """Spacing ``T + 2(k + 1)`` sufficient for ``eps = 2^-k`` shadowing."""
    k = _log2_inverse(eps)
    return transition_length(X) + 2 * (k + 1)


def shadow_specification(X: Sft, spec: Specification, eps: Dyadic,
                         periodic: bool = False, L: Optional[int] = None) -> EpBiSeq:
    """A point ``eps``-shadowing ``spec`` on a mixing shift.

    Each orbit segment is copied ``k + 1`` coordinates beyond its interval
    and consecutive copies are joined by exact-length walks.  With
    ``periodic=True`` the result satisfies ``sigma^(b_m - a_1 + L)(y) = y``.
    """
    if not X.decomposition.mixing:
        raise NotMixing(f"{X.name or 'shift'} is not mixing")
    k = _log2_inverse(eps)
    need = spec_spacing(X, eps)
    L = need if L is None else L
    if L < need:
        raise SpacingTooSmall(f"spacing {L} is below the required {need}")
    gap = spec.spacing()
    if gap is not None and gap < L:
        raise SpacingTooSmall(f"specification is only {gap}-spaced, need {L}")
    segs = spec.segments
    if not all(member(X, s.point) for s in segs):
        raise ValueError("specification points must lie in the shift")

    r = k + 1
    values = {}
    for s in segs:
        for i in range(s.a - r, s.b + r + 1):
            values[i] = s.point[i]

    def join(i0, p0, i1, p1):
        word = connect_path(X, p0[i0], p1[i1], i1 - i0)
        for j, a in enumerate(word):
            values[i0 + j] = a

    for s1, s2 in zip(segs, segs[1:]):
        join(s1.b + r, s1.point, s2.a - r, s2.point)

    first, last = segs[0], segs[-1]
    if periodic:
        period = last.b - first.a + L
        start = first.a - r
        join(last.b + r, last.point, start + period, first.point.shift(-period))
        word = tuple(values[i] for i in range(start, start + period))
        return EpBiSeq.periodic(word, start)

    lo, hi = first.a - r, last.b + r

    def fn(i):
        if i < lo:
            return first.point[i]
        if i > hi:
            return last.point[i]
        return values[i]

    return EpBiSeq.from_function(fn, min(lo, first.point.s), max(hi + 1, last.point.end),
                                 len(first.point.left), len(last.point.right))


# -- average shadowing diagnostics -----------------------------------------


@dataclass(frozen=True)
class AverageReport:
    horizon: int
    worst_window: Fraction
    step_average: Fraction
    tracing: Optional[tuple[Fraction, ...]] = field(default=None)

    @property
    def final_tracing(self) -> Optional[Fraction]:
        return self.tracing[-1] if self.tracing else None


def average_report(points: Sequence[EpBiSeq], y: Optional[EpBiSeq], n: int) -> AverageReport:
    """Finite-horizon averages of step and tracing errors, as exact rationals.

    ``worst_window`` is the largest ``(1/n) sum_{i<n} d(sigma x_{i+k}, x_{i+k+1})``
    over all starts ``k`` for which the window fits; ``step_average`` is the
    ``k = 0`` window.  ``tracing[j-1]`` is ``(1/j) sum_{i<j} d(sigma^i y, x_i)``.
    """
    pts = _points(points)
    if n < 1:
        raise ValueError("horizon must be positive")
    if len(pts) < n + 1:
        raise HorizonTooLong(f"horizon {n} needs {n + 1} points, got {len(pts)}")
    steps = [dist(p.shift(1), q).value for p, q in zip(pts, pts[1:])]
    window = sum(steps[:n])
    worst = window
    for k in range(1, len(steps) - n + 1):
        window += steps[k + n - 1] - steps[k - 1]
        worst = max(worst, window)
    tracing = None
    if y is not None:
        running = Fraction(0)
        acc = []
        for j in range(n):
            running += dist(y.shift(j), pts[j]).value
            acc.append(running / (j + 1))
        tracing = tuple(acc)
    return AverageReport(n, worst / n, sum(steps[:n]) / n, tracing)


def block_pseudo_orbit(lengths: Sequence[int], symbols: Sequence[int] = (0, 1),
                       horizon: Optional[int] = None) -> tuple[EpBiSeq, ...]:
    """Fixed points held for ``lengths[0]``, ``lengths[1]``, ... steps, cycling
    through ``symbols``; every switch is a seam with step error 1."""
    pts = []
    for j, B in enumerate(lengths):
        pts.extend([EpBiSeq.constant(symbols[j % len(symbols)])] * B)
        if horizon is not None and len(pts) >= horizon:
            return tuple(pts[:horizon])
    return tuple(pts)
