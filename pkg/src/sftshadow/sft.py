"""Memory-one shifts of finite type and their graph analysis.

An :class:`Sft` is a directed graph on symbols ``0..n-1``; its points are
the bi-infinite walks.  This module covers construction (including
higher-block recoding of forbidden-word presentations), the cyclic
decomposition of the graph, exact-length walks, topological entropy,
finite products and power shifts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import EmptyShift, NoPath, NotMixing, PQNotCoprime
from .symbolic import EpBiSeq, Word

__all__ = [
    "Sft", "CyclicDecomposition", "ComponentInfo", "PathSpectrum",
    "BlockCode", "ProductCode", "PowerCode",
    "member", "essentialize", "higher_block_recode", "strongly_connected_components",
    "period_and_classes", "transition_length", "path_spectrum", "connect_path",
    "entropy", "product", "power_shift", "generate",
]


def _join_labels(parts: Sequence[str]) -> str:
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return ".".join(parts)


@dataclass(frozen=True)
class Sft:
    labels: tuple[str, ...]
    transitions: frozenset = field(default_factory=frozenset)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(a) for a in self.labels))
        edges = frozenset((int(u), int(v)) for u, v in self.transitions)
        n = len(self.labels)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"transition ({u}, {v}) outside alphabet of size {n}")
        if len(set(self.labels)) != n:
            raise ValueError("labels must be distinct")
        object.__setattr__(self, "transitions", edges)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.transitions:
            A[u, v] = 1
        return A

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for u, v in sorted(self.transitions):
            out[u].append(v)
        return tuple(tuple(s) for s in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for u, v in sorted(self.transitions):
            out[v].append(u)
        return tuple(tuple(s) for s in out)

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.labels)}

    def allowed(self, u: int, v: int) -> bool:
        return (u, v) in self.transitions

    def is_path(self, w: Sequence[int]) -> bool:
        return all((a, b) in self.transitions for a, b in zip(w, w[1:]))

    def contains(self, x: EpBiSeq) -> bool:
        return member(self, x)

    @cached_property
    def decomposition(self) -> "CyclicDecomposition":
        return period_and_classes(self)

    def __repr__(self):
        return f"Sft({self.name or 'unnamed'}, n={self.n}, |E|={len(self.transitions)})"


def member(X: Sft, x: EpBiSeq) -> bool:
    """True iff every adjacent pair of ``x`` is an allowed transition."""
    if any(not 0 <= a < X.n for a in x.left + x.center + x.right):
        return False
    lo = x.s - len(x.left) - 1
    hi = x.end + len(x.right)
    return all(X.allowed(x[i], x[i + 1]) for i in range(lo, hi + 1))


# -- hygiene and recoding --------------------------------------------------


def _essential_vertices(n: int, edges: Iterable[tuple[int, int]]) -> list[int]:
    alive = set(range(n))
    edges = set(edges)
    while True:
        live_edges = [(u, v) for u, v in edges if u in alive and v in alive]
        has_out = {u for u, _ in live_edges}
        has_in = {v for _, v in live_edges}
        keep = alive & has_out & has_in
        if keep == alive:
            return sorted(alive)
        alive = keep


def _restrict(X_labels, edges, keep, name) -> Sft:
    new = {old: i for i, old in enumerate(keep)}
    trans = {(new[u], new[v]) for u, v in edges if u in new and v in new}
    return Sft(tuple(X_labels[i] for i in keep), frozenset(trans), name)


def essentialize(X: Sft) -> Sft:
    """Drop symbols that cannot occur in any bi-infinite walk.

    Surviving symbols are renumbered in order; labels are kept.
    """
    keep = _essential_vertices(X.n, X.transitions)
    if not keep:
        raise EmptyShift(f"{X.name or 'shift'} has no bi-infinite walk")
    if len(keep) == X.n:
        return X
    return _restrict(X.labels, X.transitions, keep, X.name)


def _as_word(w, index: dict[str, int]) -> Word:
    if isinstance(w, str) and w in index:
        return (index[w],)
    return tuple(index[str(a)] for a in w)


def _has_factor(w: Word, forbidden: set[Word]) -> bool:
    return any(w[i:j] in forbidden for i in range(len(w)) for j in range(i + 1, len(w) + 1))


@dataclass(frozen=True)
class BlockCode:
    """Conjugacy between a forbidden-word shift and its block presentation."""

    width: int  # block length W - 1
    blocks: tuple[Word, ...]

    @cached_property
    def _index(self):
        return {b: i for i, b in enumerate(self.blocks)}

    def encode(self, x: EpBiSeq) -> EpBiSeq:
        w = self.width
        idx = self._index

        def fn(i):
            try:
                return idx[x.word(i, i + w)]
            except KeyError:
                raise ValueError(f"point contains a forbidden block near index {i}") from None

        return EpBiSeq.from_function(fn, x.s - w, x.end, len(x.left), len(x.right))

    def decode(self, y: EpBiSeq) -> EpBiSeq:
        return EpBiSeq.from_function(lambda i: self.blocks[y[i]][0], y.s, y.end,
                                     len(y.left), len(y.right))


def higher_block_recode(alphabet: Sequence[str], forbidden: Iterable, name: str = ""):
    """Memory-one presentation of the shift avoiding ``forbidden``.

    Words may be strings (one character per label) or sequences of labels.
    Returns ``(sft, code)``; ``code.encode`` and ``code.decode`` map points
    between the original alphabet and the block alphabet.
    """
    labels = tuple(str(a) for a in alphabet)
    index = {a: i for i, a in enumerate(labels)}
    bad = {_as_word(w, index) for w in forbidden}
    if () in bad:
        raise EmptyShift("the empty word is forbidden")
    W = max([2] + [len(w) for w in bad])
    width = W - 1
    blocks = [b for b in itertools.product(range(len(labels)), repeat=width)
              if not _has_factor(b, bad)]
    pos = {b: i for i, b in enumerate(blocks)}
    edges = set()
    for u in blocks:
        for a in range(len(labels)):
            v = u[1:] + (a,)
            if v in pos and not _has_factor(u + (a,), bad):
                edges.add((pos[u], pos[v]))
    keep = _essential_vertices(len(blocks), edges)
    if not keep:
        raise EmptyShift("forbidden words leave no bi-infinite point")
    block_labels = [_join_labels([labels[a] for a in b]) for b in blocks]
    X = _restrict(block_labels, edges, keep, name)
    return X, BlockCode(width, tuple(blocks[i] for i in keep))


# -- graph structure -------------------------------------------------------


def strongly_connected_components(X: Sft) -> list[list[int]]:
    """Tarjan's algorithm, iterative.  Components in reverse topological order."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    succ = X.successors
    for root in range(X.n):
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def _component_period(X: Sft, comp: Sequence[int]) -> tuple[int, dict[int, int]]:
    members = set(comp)
    root = min(comp)
    level = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for v in X.successors[u]:
                if v in members and v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in comp:
        for v in X.successors[u]:
            if v in members:
                g = math.gcd(g, level[u] + 1 - level[v])
    return g, level


@dataclass(frozen=True)
class ComponentInfo:
    symbols: tuple[int, ...]
    period: int  # 0 for a trivial component (no cycle)

    @property
    def essential(self) -> bool:
        return self.period > 0


@dataclass(frozen=True)
class CyclicDecomposition:
    """Period and cyclic classes of the designated component.

    For a transitive shift ``class_of`` covers every symbol and each
    transition advances the class by one modulo ``period``.  Otherwise the
    designated component is the largest essential one.
    """

    period: int
    class_of: dict
    transitive: bool
    mixing: bool
    components: tuple[ComponentInfo, ...] = ()

    def classes(self) -> list[list[int]]:
        out = [[] for _ in range(self.period)]
        for a, r in sorted(self.class_of.items()):
            out[r].append(a)
        return out


def period_and_classes(X: Sft) -> CyclicDecomposition:
    comps = strongly_connected_components(X)
    infos = []
    levels = {}
    for comp in comps:
        g, level = _component_period(X, comp)
        infos.append(ComponentInfo(tuple(comp), g))
        levels[tuple(comp)] = level
    essential = [c for c in infos if c.essential]
    infos.sort(key=lambda c: c.symbols)
    if not essential:
        return CyclicDecomposition(0, {}, False, False, tuple(infos))
    main = max(essential, key=lambda c: (len(c.symbols), -min(c.symbols)))
    N = main.period
    class_of = {a: lvl % N for a, lvl in levels[main.symbols].items()}
    transitive = len(comps) == 1 and main.essential
    return CyclicDecomposition(N, class_of, transitive, transitive and N == 1, tuple(infos))


def _bool_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return (A @ B > 0).astype(np.int64)


def transition_length(X: Sft) -> int:
    """Least ``T`` with a walk of every length ``n >= T`` between all pairs."""
    if not X.decomposition.mixing:
        raise NotMixing(f"{X.name or 'shift'} is not mixing")
    n = X.n
    P = np.eye(n, dtype=np.int64)
    cap = (n - 1) ** 2 + 1
    for t in range(cap + 1):
        if P.all():
            return t
        P = _bool_matmul(P, X.matrix)
    raise AssertionError("primitive matrix exceeded the Wielandt bound")


@dataclass(frozen=True)
class PathSpectrum:
    """All lengths of ``u -> v`` walks.

    A length ``n`` is feasible iff it is in ``lengths_below`` or
    ``n >= threshold`` and ``n % modulus`` is in ``residues``.
    """

    u: int
    v: int
    modulus: int
    residues: frozenset
    threshold: int
    lengths_below: frozenset

    def admits(self, n: int) -> bool:
        if n < self.threshold:
            return n in self.lengths_below
        return n % self.modulus in self.residues

    @property
    def residue(self) -> Optional[int]:
        if len(self.residues) == 1:
            return next(iter(self.residues))
        return None


def _power_sequence(X: Sft):
    """Boolean powers ``A^0, A^1, ...`` up to the first repetition ``(n1, n2)``."""
    seen = {}
    powers = []
    P = np.eye(X.n, dtype=np.int64)
    while True:
        key = P.tobytes()
        if key in seen:
            return powers, seen[key], len(powers)
        seen[key] = len(powers)
        powers.append(P)
        P = _bool_matmul(P, X.matrix)


def path_spectrum(X: Sft, u: int, v: int) -> PathSpectrum:
    powers, n1, n2 = _power_sequence(X)
    p = n2 - n1
    feas = [bool(P[u, v]) for P in powers]
    residues = frozenset(k % p for k in range(n1, n2) if feas[k])
    n0 = n1
    while n0 > 0 and feas[n0 - 1] == ((n0 - 1) % p in residues):
        n0 -= 1
    below = frozenset(k for k in range(n0) if feas[k])
    return PathSpectrum(u, v, p, residues, n0, below)


def connect_path(X: Sft, u: int, v: int, n: int) -> Word:
    """A walk ``w`` of length ``n`` (``n + 1`` symbols) from ``u`` to ``v``.

    Among all such walks the lexicographically smallest is returned.
    Raises :class:`NoPath` carrying the :class:`PathSpectrum` otherwise.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    reach = [{v}]
    for _ in range(n):
        prev = reach[-1]
        reach.append({w for w in range(X.n) if any(t in prev for t in X.successors[w])})
    if u not in reach[n]:
        raise NoPath(f"no walk of length {n} from {X.labels[u]} to {X.labels[v]}",
                     path_spectrum(X, u, v))
    w = [u]
    for t in range(1, n + 1):
        w.append(min(b for b in X.successors[w[-1]] if b in reach[n - t]))
    return tuple(w)


# -- entropy ---------------------------------------------------------------


def _perron_root(B: np.ndarray, rtol=1e-12, max_iter=100_000) -> float:
    """Spectral radius of a primitive nonnegative matrix.

    Iterates from the all-ones vector and stops when the Collatz-Wielandt
    bounds ``min (Bv)_i / v_i <= rho <= max (Bv)_i / v_i`` meet.
    """
    v = np.ones(B.shape[0])
    lo = hi = 0.0
    for _ in range(max_iter):
        w = B @ v
        ratio = w / v
        lo, hi = ratio.min(), ratio.max()
        if hi - lo <= rtol * hi:
            break
        v = w / hi
    return (lo + hi) / 2


def entropy(X: Sft) -> float:
    """Natural log of the spectral radius of the transition matrix."""
    dec = X.decomposition
    best = 0.0
    A = X.matrix.astype(float)
    for comp in dec.components:
        if not comp.essential:
            continue
        N = comp.period
        sub = A[np.ix_(comp.symbols, comp.symbols)]
        _, level = _component_period(X, comp.symbols)
        cls0 = [i for i, a in enumerate(comp.symbols) if level[a] % N == 0]
        B = np.linalg.matrix_power(sub, N)[np.ix_(cls0, cls0)]
        rho = _perron_root(B) ** (1.0 / N)
        best = max(best, math.log(rho))
    return best


# -- products and powers ---------------------------------------------------


@dataclass(frozen=True)
class ProductCode:
    n2: int

    def join(self, x1: EpBiSeq, x2: EpBiSeq) -> EpBiSeq:
        lo = min(x1.s, x2.s)
        hi = max(x1.end, x2.end)
        lp = math.lcm(len(x1.left), len(x2.left))
        rp = math.lcm(len(x1.right), len(x2.right))
        return EpBiSeq.from_function(lambda i: x1[i] * self.n2 + x2[i], lo, hi, lp, rp)

    def split(self, z: EpBiSeq) -> tuple[EpBiSeq, EpBiSeq]:
        args = (z.s, z.end, len(z.left), len(z.right))
        return (EpBiSeq.from_function(lambda i: z[i] // self.n2, *args),
                EpBiSeq.from_function(lambda i: z[i] % self.n2, *args))


def product(X1: Sft, X2: Sft):
    """Componentwise product; symbol ``(a, b)`` is numbered ``a * n2 + b``."""
    n2 = X2.n
    labels = [f"{a}:{b}" for a in X1.labels for b in X2.labels]
    trans = {(u1 * n2 + u2, v1 * n2 + v2)
             for (u1, v1) in X1.transitions for (u2, v2) in X2.transitions}
    name = f"{X1.name or 'X1'}x{X2.name or 'X2'}"
    return Sft(tuple(labels), frozenset(trans), name), ProductCode(n2)


@dataclass(frozen=True)
class PowerCode:
    """The ``n``-block conjugacy between ``(X, sigma^n)`` and the power shift."""

    n: int
    blocks: tuple[Word, ...]

    @cached_property
    def _index(self):
        return {b: i for i, b in enumerate(self.blocks)}

    def encode(self, x: EpBiSeq) -> EpBiSeq:
        n = self.n
        lp = math.lcm(len(x.left), n) // n
        rp = math.lcm(len(x.right), n) // n
        lo = x.s // n - 1
        hi = -(-x.end // n) + 1
        return EpBiSeq.from_function(lambda i: self._index[x.word(n * i, n * i + n)],
                                     lo, hi, lp, rp)

    def decode(self, y: EpBiSeq) -> EpBiSeq:
        n = self.n
        return EpBiSeq.from_function(lambda j: self.blocks[y[j // n]][j % n],
                                     y.s * n, y.end * n, len(y.left) * n, len(y.right) * n)


def power_shift(X: Sft, n: int):
    """Shift on allowed ``n``-blocks of ``X``, conjugate to ``sigma^n``."""
    if n < 1:
        raise ValueError("power must be >= 1")
    blocks = [(a,) for a in range(X.n)]
    for _ in range(n - 1):
        blocks = [b + (c,) for b in blocks for c in X.successors[b[-1]]]
    blocks.sort()
    pos = {b: i for i, b in enumerate(blocks)}
    trans = {(pos[u], pos[v]) for u in blocks for v in blocks if X.allowed(u[-1], v[0])}
    labels = [_join_labels([X.labels[a] for a in b]) for b in blocks]
    Y = Sft(tuple(labels), frozenset(trans), f"{X.name or 'X'}^{n}")
    return Y, PowerCode(n, tuple(blocks))


# -- generators ------------------------------------------------------------


def _cycle_labels(n: int) -> list[str]:
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [str(i) for i in range(n)]


def generate(kind: str, *params: int) -> Sft:
    """Example shifts.

    ``generate("pq", p, q)``   two loops of coprime lengths p and q through 0
    ``generate("cycle", n)``   the directed n-cycle (labels a, b, c, ...)
    ``generate("full", r)``    the full r-shift
    ``generate("golden")``     golden-mean shift (no two consecutive 1s)
    """
    if kind == "pq":
        p, q = params
        if p < 2 or q < 2 or math.gcd(p, q) != 1:
            raise PQNotCoprime(f"need coprime p, q >= 2, got ({p}, {q})")
        r = p + q - 1
        ploop = list(range(p))
        qloop = [0] + list(range(p, p + q - 1))
        trans = {(c[i], c[(i + 1) % len(c)]) for c in (ploop, qloop) for i in range(len(c))}
        return Sft(tuple(str(i) for i in range(r)), frozenset(trans), f"X({p},{q})")
    if kind == "cycle":
        (n,) = params
        if n < 1:
            raise ValueError("cycle length must be >= 1")
        trans = {(i, (i + 1) % n) for i in range(n)}
        return Sft(tuple(_cycle_labels(n)), frozenset(trans), f"cycle{n}")
    if kind == "full":
        (r,) = params
        if r < 1:
            raise ValueError("alphabet size must be >= 1")
        trans = {(u, v) for u in range(r) for v in range(r)}
        return Sft(tuple(str(i) for i in range(r)), frozenset(trans), f"full{r}")
    if kind == "golden":
        return Sft(("0", "1"), frozenset({(0, 0), (0, 1), (1, 0)}), "golden")
    raise ValueError(f"unknown kind {kind!r}")
