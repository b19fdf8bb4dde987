"""Brute-force enumeration used as ground truth for the constructive code.

Nothing here consults cyclic classes or synthesizers: points are produced
by exhaustive walks and shadows are found by trying every candidate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import EmptyShift
from .sft import Sft, essentialize
from .shadowing import GapShadow, TsLimitPseudoOrbit
from .symbolic import BACKWARD, FORWARD, EpBiSeq, Word, is_rotation, primitive_root, tail_sync

__all__ = ["EnumBounds", "closed_walks", "walks", "enumerate_points", "brute_shadow_search",
           "enumerate_sfts", "canonical_relabel"]


@dataclass(frozen=True)
class EnumBounds:
    max_left: int = 4
    max_right: int = 4
    max_center: int = 8
    anchor_radius: int = 8

    def __post_init__(self):
        if min(self.max_left, self.max_right) < 1 or self.max_center < 0 or self.anchor_radius < 0:
            raise ValueError("bounds must be positive")

    def admits(self, x: EpBiSeq) -> bool:
        return (len(x.left) <= self.max_left and len(x.right) <= self.max_right
                and len(x.center) <= self.max_center and abs(x.s) <= self.anchor_radius)


def walks(X: Sft, length: int, start: Optional[int] = None) -> Iterator[Word]:
    """Every walk with ``length`` symbols, in lexicographic order."""
    if length == 0:
        yield ()
        return
    firsts = range(X.n) if start is None else X.successors[start]

    def extend(w):
        if len(w) == length:
            yield tuple(w)
            return
        for b in X.successors[w[-1]]:
            w.append(b)
            yield from extend(w)
            w.pop()

    for a in firsts:
        yield from extend([a])


def closed_walks(X: Sft, length: int) -> list[Word]:
    """Primitive words ``w`` whose cyclic repetition is a walk."""
    return [w for w in walks(X, length)
            if X.allowed(w[-1], w[0]) and primitive_root(w) == w]


def _candidates(X: Sft, b: EnumBounds, left_ok=None, right_ok=None):
    lefts = [w for p in range(1, b.max_left + 1) for w in closed_walks(X, p)]
    rights = [w for p in range(1, b.max_right + 1) for w in closed_walks(X, p)]
    if left_ok is not None:
        lefts = [w for w in lefts if left_ok(w)]
    if right_ok is not None:
        rights = [w for w in rights if right_ok(w)]
    anchors = sorted(range(-b.anchor_radius, b.anchor_radius + 1), key=lambda s: (abs(s), s))
    for c in range(b.max_center + 1):
        for L in lefts:
            for C in walks(X, c, start=L[-1]):
                tail_end = C[-1] if C else L[-1]
                for R in rights:
                    if not X.allowed(tail_end, R[0]):
                        continue
                    for s in anchors:
                        yield L, C, R, s


def enumerate_points(X: Sft, b: EnumBounds = EnumBounds()) -> Iterator[EpBiSeq]:
    """Each point of ``X`` whose canonical description fits ``b``, once."""
    seen = set()
    for L, C, R, s in _candidates(X, b):
        x = EpBiSeq(L, C, R, s)
        if x in seen or not b.admits(x):
            continue
        seen.add(x)
        yield x


def _gap_order(bound: int):
    yield 0
    for g in range(1, bound + 1):
        yield g
        yield -g


def brute_shadow_search(X: Sft, t: TsLimitPseudoOrbit, gap_bound: int,
                        b: EnumBounds = EnumBounds()) -> Optional[GapShadow]:
    """Try every enumerated point and every ``|K| <= gap_bound``.

    Returns a verified shadow of least ``|K|`` or ``None``.  Candidates
    whose periodic words are not rotations of the target tails are
    skipped, since their tails cannot agree.
    """
    a_left = t.left.left
    b_right = t.right.right
    best = None
    for L, C, R, s in _candidates(X, b, lambda w: is_rotation(w, a_left),
                                  lambda w: is_rotation(w, b_right)):
        y = EpBiSeq(L, C, R, s)
        if tail_sync(y, t.left, BACKWARD) is None:
            continue
        for K in _gap_order(gap_bound):
            if best is not None and abs(K) >= abs(best.K):
                break
            if tail_sync(y.shift(K), t.right, FORWARD) is not None:
                best = GapShadow(y, K)
                break
        if best is not None and best.K == 0:
            return best
    return best


def canonical_relabel(n: int, edges) -> tuple[int, tuple]:
    """Isomorphism-invariant key of a graph on ``n`` vertices."""
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted((perm[u], perm[v]) for u, v in edges))
        if best is None or key < best:
            best = key
    return n, best


def enumerate_sfts(k: int) -> Iterator[Sft]:
    """Every nonempty essential SFT on at most ``k`` symbols, up to relabeling."""
    if not 1 <= k <= 3:
        raise ValueError("alphabet size must be 1, 2 or 3")
    pairs = [(u, v) for u in range(k) for v in range(k)]
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        raw = Sft(tuple(str(i) for i in range(k)), frozenset(edges))
        try:
            X = essentialize(raw)
        except EmptyShift:
            continue
        key = canonical_relabel(X.n, X.transitions)
        if key in seen:
            continue
        seen.add(key)
        n, canon = key
        bits = "".join("1" if (u, v) in set(canon) else "0" for u in range(n) for v in range(n))
        yield Sft(tuple(str(i) for i in range(n)), frozenset(canon), f"g{n}-{bits}")
