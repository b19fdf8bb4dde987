"""Cross-check suites driven by ``sftshadow verify``.

Each suite yields ``(case_id, passed, detail)`` triples.  The checks pair
a constructive routine with an independent computation: reachability
closures and matrix powers for graph structure, exhaustive search for
shadows, direct metric scans for tracing bounds.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fullshift import decay_margin, diagonal_shadow, verify_decay
from .oracle import EnumBounds, brute_shadow_search, enumerate_sfts
from .sampling import (random_finite_pseudo_orbit, random_full_tslimit, random_metric_space,
                       random_specification, random_tslimit)
from .sft import generate, member, period_and_classes
from .shadowing import (TsLimitPseudoOrbit, minimal_gap, shadow_finite, shadow_specification,
                        spec_spacing, two_sided_limit_shadow, verify_two_sided)
from .symbolic import Dyadic, EpBiSeq, dist
from .errors import DecayFailure

SUITES = ("sft", "shadow", "gap", "finite", "spec", "decay")


def _reach_closure(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    R = ((np.eye(n, dtype=np.int64) + A) > 0).astype(np.int64)
    for _ in range(n):
        R = ((R @ R) > 0).astype(np.int64)
    return R


def _primitive(A: np.ndarray) -> bool:
    n = A.shape[0]
    P = A.copy()
    for _ in range((n - 1) ** 2 + 1):
        if P.all():
            return True
        P = ((P @ A) > 0).astype(np.int64)
    return bool(P.all())


def suite_sft(seed: int):
    for X in enumerate_sfts(3):
        dec = period_and_classes(X)
        strongly = bool(_reach_closure(X.matrix).all())
        prim = _primitive(X.matrix)
        edges_ok = dec.transitive is False or all(
            dec.class_of[v] == (dec.class_of[u] + 1) % dec.period for u, v in X.transitions)
        ok = dec.transitive == strongly and dec.mixing == prim and edges_ok
        yield (f"sft/{X.name}", ok,
               f"transitive={dec.transitive} mixing={dec.mixing} period={dec.period}")


def _covering_bounds(y: EpBiSeq) -> EnumBounds:
    return EnumBounds(max(4, len(y.left)), max(4, len(y.right)),
                      len(y.center), max(abs(y.s), 2))


def suite_shadow(seed: int, per_sft: int = 3):
    rng = np.random.default_rng(seed)
    for X in enumerate_sfts(3):
        if not X.decomposition.transitive:
            continue
        for j in range(per_sft):
            t = random_tslimit(X, rng)
            g = two_sided_limit_shadow(X, t)
            ok = verify_two_sided(t, g.y, g.K)
            best = brute_shadow_search(X, t, abs(g.K), _covering_bounds(g.y))
            ok = ok and best is not None and abs(best.K) == abs(g.K)
            yield f"shadow/{X.name}/{j}", ok, f"K={g.K} brute={None if best is None else best.K}"


def suite_gap(seed: int):
    for N in range(1, 6):
        X = generate("cycle", N)
        worst = 0
        a = EpBiSeq.periodic(range(N))
        for r in range(N):
            t = TsLimitPseudoOrbit.from_tails(a, a.shift(r))
            found = brute_shadow_search(X, t, N, EnumBounds(N, N, 0, N))
            worst = max(worst, abs(found.K))
        g = minimal_gap(X)
        yield f"gap/cycle{N}", g == worst == N // 2, f"minimal_gap={g} exhaustive={worst}"


def suite_finite(seed: int, count: int = 10):
    rng = np.random.default_rng(seed)
    for X in (generate("full", 2), generate("golden"), generate("pq", 3, 4)):
        for k in (1, 3, 5):
            ok = True
            for _ in range(count):
                po = random_finite_pseudo_orbit(X, rng, 8, k)
                y, eps = shadow_finite(X, po)
                direct = max(dist(y.shift(i), p) for i, p in enumerate(po))
                ok = ok and member(X, y) and eps == direct and eps <= Dyadic(k)
            yield f"finite/{X.name}/k{k}", ok, f"{count} pseudo-orbits"


def suite_spec(seed: int, count: int = 10):
    rng = np.random.default_rng(seed)
    X = generate("pq", 3, 4)
    eps = Dyadic(3)
    L = spec_spacing(X, eps)
    for periodic in (False, True):
        ok = True
        for _ in range(count):
            spec = random_specification(X, rng, L)
            y = shadow_specification(X, spec, eps, periodic=periodic)
            ok = ok and member(X, y) and all(dist(y.shift(n), spec.P(n)) < eps for n in spec.times())
            if periodic:
                segs = spec.segments
                ok = ok and y.shift(segs[-1].b - segs[0].a + L) == y
        yield f"spec/{'periodic' if periodic else 'plain'}", ok, f"L={L}"


def suite_decay(seed: int, count: int = 5):
    rng = np.random.default_rng(seed)
    for j in range(count):
        S = random_metric_space(rng, int(rng.integers(2, 7)))
        t = random_full_tslimit(S.n, rng)
        x = diagonal_shadow(t)
        try:
            for p in (1, 2, 3, 4):
                verify_decay(S, t, x, p, margin=decay_margin(p))
            ok, detail = True, f"n={S.n} m={t.m}"
        except DecayFailure as exc:
            ok, detail = False, str(exc)
        yield f"decay/{j}", ok, detail


def run_suites(names, seed: int = 0):
    table = {"sft": suite_sft, "shadow": suite_shadow, "gap": suite_gap,
             "finite": suite_finite, "spec": suite_spec, "decay": suite_decay}
    results = []
    for name in names:
        results.extend(table[name](seed))
    return sorted(results, key=lambda r: r[0])
