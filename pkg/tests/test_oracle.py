import itertools

import networkx as nx
import numpy as np
import pytest

from sftshadow import EpBiSeq, TsLimitPseudoOrbit, generate, member, verify_two_sided
from sftshadow.oracle import (EnumBounds, brute_shadow_search, canonical_relabel, closed_walks,
                              enumerate_points, enumerate_sfts, walks)


def prune(G):
    G = G.copy()
    while True:
        dead = [v for v in G if G.in_degree(v) == 0 or G.out_degree(v) == 0]
        if not dead:
            return G
        G.remove_nodes_from(dead)


def independent_family(k):
    reps = []
    for n in range(1, k + 1):
        pairs = list(itertools.product(range(n), repeat=2))
        for mask in range(1 << len(pairs)):
            G = nx.DiGraph()
            G.add_nodes_from(range(n))
            G.add_edges_from(p for i, p in enumerate(pairs) if mask >> i & 1)
            G = prune(G)
            if G.number_of_nodes() == 0:
                continue
            if not any(nx.is_isomorphic(G, H) for H in reps):
                reps.append(G)
    return reps


@pytest.mark.parametrize("k", [1, 2, 3])
def test_family_matches_networkx_isomorphism_classes(k):
    ours = list(enumerate_sfts(k))
    theirs = independent_family(k)
    assert len(ours) == len(theirs)
    for X in ours:
        G = nx.DiGraph()
        G.add_nodes_from(range(X.n))
        G.add_edges_from(X.transitions)
        assert sum(nx.is_isomorphic(G, H) for H in theirs) == 1


def test_family_sizes():
    # [DERIVED] frozen from the networkx cross-check above
    fam = list(enumerate_sfts(3))
    assert [len(list(enumerate_sfts(k))) for k in (1, 2, 3)] == [1, 6, 61]
    assert sum(X.decomposition.transitive for X in fam) == 34
    assert sum(X.decomposition.mixing for X in fam) == 31


def test_canonical_relabel_is_invariant():
    edges = [(0, 1), (1, 2), (2, 0), (0, 0)]
    for perm in itertools.permutations(range(3)):
        assert canonical_relabel(3, [(perm[u], perm[v]) for u, v in edges]) == canonical_relabel(3, edges)


def test_walk_counts_match_matrix_powers():
    X = generate("pq", 3, 4)
    for n in range(1, 8):
        assert len(list(walks(X, n))) == np.linalg.matrix_power(X.matrix, n - 1).sum()
    # primitive closed words of length p, up to rotation, are the p-cycles
    assert len(closed_walks(X, 3)) == 3 and len(closed_walks(X, 4)) == 4


def test_enumerated_points_are_distinct_members():
    X = generate("golden")
    b = EnumBounds(2, 2, 3, 2)
    pts = list(enumerate_points(X, b))
    assert len(pts) == len(set(pts))
    assert all(member(X, x) and b.admits(x) for x in pts)
    assert EpBiSeq((0,), (1,), (0,), 0) in pts and EpBiSeq.periodic((0, 1), 1) in pts


def test_brute_search_returns_verified_least_gap():
    X = generate("cycle", 3)
    a = EpBiSeq.periodic((0, 1, 2))
    for r, want in [(0, 0), (1, 1), (2, 1)]:
        t = TsLimitPseudoOrbit.from_tails(a, a.shift(r))
        g = brute_shadow_search(X, t, 3, EnumBounds(3, 3, 0, 3))
        assert abs(g.K) == want and verify_two_sided(t, g.y, g.K)


def test_brute_search_returns_none_without_connection():
    X = next(Z for Z in enumerate_sfts(2) if Z.name == "g2-1101")
    # 0 -> 1 is allowed but not 1 -> 0: no orbit comes from 1^inf and goes to 0^inf
    t = TsLimitPseudoOrbit.from_tails(EpBiSeq.constant(1), EpBiSeq.constant(0))
    assert brute_shadow_search(X, t, 6) is None
    back = TsLimitPseudoOrbit.from_tails(EpBiSeq.constant(0), EpBiSeq.constant(1))
    assert brute_shadow_search(X, back, 0) is not None


def test_bounds_validation():
    with pytest.raises(ValueError):
        EnumBounds(0, 1, 1, 1)
    with pytest.raises(ValueError):
        list(enumerate_sfts(4))
