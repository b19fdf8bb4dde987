"""Eventually periodic bi-infinite sequences and the symbolic metric.

A point ``x = (x_i)`` is stored as a left periodic word, a finite centre
word and a right periodic word, anchored so that the centre occupies the
indices ``s, ..., s + len(center) - 1``.  Every instance is brought to a
canonical form on construction, so ``==`` and ``hash`` decide equality
of the denoted sequences.

Symbols are small non-negative integers; labels live on the
:class:`~sftshadow.sft.Sft` that owns the alphabet.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Callable, Iterable, Optional

Word = tuple[int, ...]


def primitive_root(w: Word) -> Word:
    """Return the shortest ``u`` with ``w == u * j`` (KMP failure function)."""
    n = len(w)
    if n == 0:
        return w
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return w[:p] if n % p == 0 else w


def is_rotation(u: Word, v: Word) -> bool:
    if len(u) != len(v):
        return False
    if not u:
        return True
    doubled = v + v
    return any(doubled[i:i + len(u)] == u for i in range(len(v)))


def _raw_at(L: Word, C: Word, R: Word, s: int, i: int) -> int:
    if i < s:
        return L[(i - s) % len(L)]
    j = i - s
    if j < len(C):
        return C[j]
    return R[(j - len(C)) % len(R)]


def _canonicalize(L: Word, C: Word, R: Word, s: int):
    L = primitive_root(L)
    R = primitive_root(R)
    pl, pr = len(L), len(R)
    e = s + len(C)

    def at(i):
        return _raw_at(L, C, R, s, i)

    # Push the left tail as far right as it goes.  Agreement over
    # pl + pr positions of the right tail forces a purely periodic point.
    bl = s
    limit = e + pl + pr
    while bl < limit and at(bl) == L[(bl - s) % pl]:
        bl += 1
    if bl >= limit:
        word = tuple(L[(i - s) % pl] for i in range(pl))
        return word, (), word, 0

    br = e
    while br - 1 >= bl and at(br - 1) == R[(br - 1 - e) % pr]:
        br -= 1
    start = max(br, bl)
    newL = tuple(L[(bl + j - s) % pl] for j in range(pl))
    newC = tuple(at(i) for i in range(bl, start))
    newR = tuple(R[(start + j - e) % pr] for j in range(pr))
    return newL, newC, newR, bl


def _tuple(w) -> Word:
    return tuple(int(a) for a in w)


@dataclass(frozen=True)
class EpBiSeq:
    """An eventually periodic point of ``A^Z``.

    ``x_i`` equals ``left[(i - s) % len(left)]`` for ``i < s``, ``center[i - s]``
    inside the centre window, and continues periodically with ``right``
    afterwards.
    """

    left: Word
    center: Word = ()
    right: Optional[Word] = None
    s: int = 0

    def __post_init__(self):
        left = _tuple(self.left)
        right = left if self.right is None else _tuple(self.right)
        if not left or not right:
            raise ValueError("periodic words must be nonempty")
        fields = _canonicalize(left, _tuple(self.center), right, int(self.s))
        for name, value in zip(("left", "center", "right", "s"), fields):
            object.__setattr__(self, name, value)

    @classmethod
    def _trusted(cls, left, center, right, s) -> "EpBiSeq":
        obj = object.__new__(cls)
        object.__setattr__(obj, "left", left)
        object.__setattr__(obj, "center", center)
        object.__setattr__(obj, "right", right)
        object.__setattr__(obj, "s", s)
        return obj

    @classmethod
    def constant(cls, a: int) -> "EpBiSeq":
        return cls((a,), (), (a,), 0)

    @classmethod
    def periodic(cls, word: Iterable[int], phase: int = 0) -> "EpBiSeq":
        """Point with ``x_i = word[(i - phase) % len(word)]``."""
        word = _tuple(word)
        return cls(word, (), word, phase)

    @classmethod
    def from_function(cls, fn: Callable[[int], int], lo: int, hi: int,
                      left_period: int, right_period: int) -> "EpBiSeq":
        """Build the point ``i -> fn(i)``.

        ``fn`` must be ``left_period``-periodic on ``i < lo`` and
        ``right_period``-periodic on ``i >= hi``.
        """
        hi = max(hi, lo)
        L = tuple(fn(i) for i in range(lo - left_period, lo))
        C = tuple(fn(i) for i in range(lo, hi))
        R = tuple(fn(i) for i in range(hi, hi + right_period))
        return cls(L, C, R, lo)

    @property
    def end(self) -> int:
        """First index of the right periodic tail."""
        return self.s + len(self.center)

    @property
    def is_periodic(self) -> bool:
        return not self.center and self.s == 0 and self.left == self.right

    def __getitem__(self, i: int) -> int:
        return _raw_at(self.left, self.center, self.right, self.s, i)

    def word(self, lo: int, hi: int) -> Word:
        """Coordinates on ``[lo, hi)``."""
        return tuple(self[i] for i in range(lo, hi))

    def shift(self, k: int = 1) -> "EpBiSeq":
        """``sigma^k``: the result has ``y_i = x_{i+k}``."""
        if k == 0:
            return self
        if self.is_periodic:
            p = len(self.left)
            r = k % p
            word = self.left[r:] + self.left[:r]
            return EpBiSeq._trusted(word, (), word, 0)
        return EpBiSeq._trusted(self.left, self.center, self.right, self.s - k)

    def support_window(self) -> tuple[int, int]:
        """Indices ``[lo, hi)`` outside of which both tails are periodic."""
        return self.s, self.end

    def __repr__(self):
        def w(t):
            return "".join(map(str, t)) if all(a < 10 for a in t) else ",".join(map(str, t))
        return f"EpBiSeq({w(self.left)}|{w(self.center)}|{w(self.right)}@{self.s})"


def point_at(x: EpBiSeq, i: int) -> int:
    return x[i]


def shift(x: EpBiSeq, k: int = 1) -> EpBiSeq:
    return x.shift(k)


# -- the symbolic metric ---------------------------------------------------


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """A distance ``2**-exponent``; ``exponent=None`` is zero."""

    exponent: Optional[int]

    def __post_init__(self):
        if self.exponent is not None and self.exponent < 0:
            raise ValueError("exponent must be non-negative")

    @property
    def value(self) -> Fraction:
        if self.exponent is None:
            return Fraction(0)
        return Fraction(1, 2 ** self.exponent)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __lt__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.value < other.value

    def __str__(self):
        return "0" if self.exponent is None else f"2^-{self.exponent}"


ZERO = Dyadic(None)


def _disagreement_radius(x: EpBiSeq, y: EpBiSeq) -> int:
    lo = min(x.s, y.s) - math.lcm(len(x.left), len(y.left))
    hi = max(x.end, y.end) + math.lcm(len(x.right), len(y.right))
    return max(abs(lo), abs(hi)) + 1


def dist(x: EpBiSeq, y: EpBiSeq) -> Dyadic:
    """``2**-min{|i| : x_i != y_i}``, or :data:`ZERO` when ``x == y``."""
    if x == y:
        return ZERO
    for r in range(_disagreement_radius(x, y) + 1):
        if x[r] != y[r] or x[-r] != y[-r]:
            return Dyadic(r)
    raise AssertionError("unequal points must disagree inside the radius")


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


FORWARD = Direction.FORWARD
BACKWARD = Direction.BACKWARD


@dataclass(frozen=True)
class SyncWitness:
    """Agreement holds for all ``i >= sync_index`` (forward) or all
    ``i <= -sync_index`` (backward).  ``sync_index`` is never negative."""

    direction: Direction
    sync_index: int

    def check(self, x: EpBiSeq, y: EpBiSeq) -> bool:
        if self.direction is FORWARD:
            lo = self.sync_index
            hi = max(x.end, y.end, lo) + math.lcm(len(x.right), len(y.right))
        else:
            hi = -self.sync_index + 1
            lo = min(x.s, y.s, hi) - math.lcm(len(x.left), len(y.left))
        return all(x[i] == y[i] for i in range(lo, hi))


def tail_sync(x: EpBiSeq, y: EpBiSeq, direction: Direction) -> Optional[SyncWitness]:
    """Decide forward (stable set) or backward (unstable set) asymptoticity.

    Returns the witness with the least admissible non-negative sync index,
    or ``None`` when the tails never agree.
    """
    if direction is FORWARD:
        e = max(x.end, y.end)
        window = math.lcm(len(x.right), len(y.right))
        if any(x[i] != y[i] for i in range(e, e + window)):
            return None
        if x == y:
            return SyncWitness(FORWARD, 0)
        i = e - 1
        while x[i] == y[i]:
            i -= 1
        return SyncWitness(FORWARD, max(0, i + 1))
    s = min(x.s, y.s)
    window = math.lcm(len(x.left), len(y.left))
    if any(x[i] != y[i] for i in range(s - window, s)):
        return None
    if x == y:
        return SyncWitness(BACKWARD, 0)
    i = s
    while x[i] == y[i]:
        i += 1
    return SyncWitness(BACKWARD, max(0, 1 - i))
