from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import points, seeds
from sftshadow import (EpBiSeq, FiniteMetricSpace, TsLimitPseudoOrbit, chain_bound,
                       diagonal_shadow, metric_D, product_space, verify_decay)
from sftshadow.errors import DecayFailure
from sftshadow.fullshift import decay_margin, join_points, split_point, split_pseudo_orbit
from sftshadow.sampling import random_full_tslimit, random_metric_space

DISCRETE2 = FiniteMetricSpace.from_table([[0, 1], [1, 0]])
PATH3 = FiniteMetricSpace.from_table([[0, 1, 2], [1, 0, 1], [2, 1, 0]])


def brute_D(S, x, y, W=60):
    return max(S.d(x[j], y[j]) / 2 ** abs(j) for j in range(-W, W + 1))


def test_metric_space_validation():
    assert PATH3.scale == 2 and PATH3.diameter == 1
    for bad in ([[0, 1], [2, 0]], [[1, 0], [0, 0]], [[0, 0], [0, 0]],
                [[0, 1, 3], [1, 0, 1], [3, 1, 0]]):
        with pytest.raises(ValueError):
            FiniteMetricSpace.from_table(bad)
    with pytest.raises(ValueError):
        FiniteMetricSpace(((0, 2), (2, 0)))


@settings(max_examples=100)
@given(points(alphabet=3), points(alphabet=3))
def test_D_matches_windowed_supremum(x, y):
    assert metric_D(PATH3, x, y) == brute_D(PATH3, x, y)


@settings(max_examples=60)
@given(points(alphabet=3), points(alphabet=3), points(alphabet=3))
def test_D_is_a_metric(x, y, z):
    assert metric_D(PATH3, x, y) == metric_D(PATH3, y, x)
    assert (metric_D(PATH3, x, y) == 0) == (x == y)
    assert metric_D(PATH3, x, z) <= metric_D(PATH3, x, y) + metric_D(PATH3, y, z)


@settings(max_examples=60)
@given(seeds)
def test_diagonal_reads_term_centres(seed):
    rng = np.random.default_rng(seed)
    t = random_full_tslimit(4, rng)
    x = diagonal_shadow(t)
    assert all(x[j] == t.term(j)[0] for j in range(-40, 41))


@settings(max_examples=60)
@given(seeds)
def test_decay_holds_past_the_shifted_threshold(seed):
    rng = np.random.default_rng(seed)
    S = random_metric_space(rng, int(rng.integers(2, 7)))
    t = random_full_tslimit(S.n, rng)
    x = diagonal_shadow(t)
    for p in (1, 2, 3, 4, 5):
        res = verify_decay(S, t, x, p, margin=decay_margin(p))
        for m in range(res.horizon[0], res.horizon[1] + 1):
            if abs(m) >= res.n_p + decay_margin(p):
                assert res.distances[m] <= Fraction(1, 2 ** p)
        # n_p really is the least step threshold
        if res.n_p > 0:
            m = res.n_p - 1
            worst = max(metric_D(S, t.term(i).shift(1), t.term(i + 1)) for i in (m, -m))
            assert worst > Fraction(1, 2 ** (p + 1))


def test_true_orbit_has_zero_threshold():
    z = EpBiSeq((0, 1), (2,), (1, 2, 0), 3)
    t = TsLimitPseudoOrbit.from_tails(z, z, m=2)
    x = diagonal_shadow(t)
    assert x == z
    for p in (1, 2, 3):
        res = verify_decay(PATH3, t, x, p)
        assert res.n_p == 0 and res.minimal_n == 0
        assert all(d == 0 for d in res.distances.values())


def spike():
    zero, one = EpBiSeq.constant(0), EpBiSeq.constant(1)
    return TsLimitPseudoOrbit(zero, zero, (one,), 1)


def test_unshifted_threshold_can_fail():
    # a single noisy term at time 0 makes steps -1 and 0 bad, so n_3 = 2;
    # the diagonal point carries a 1 at index 0, which sigma^-2 moves to
    # index 2 where the weight is 1/4 > 1/8
    t = spike()
    x = diagonal_shadow(t)
    assert x == EpBiSeq((0,), (1,), (0,), 0)
    with pytest.raises(DecayFailure) as info:
        verify_decay(DISCRETE2, t, x, 3)
    assert info.value.m == -2 and info.value.value == Fraction(1, 4)
    res = verify_decay(DISCRETE2, t, x, 3, margin=decay_margin(3))
    assert res.n_p == 2 and res.minimal_n == 3


def test_candidate_must_share_tails():
    t = spike()
    with pytest.raises(DecayFailure):
        verify_decay(DISCRETE2, t, EpBiSeq.constant(1), 1)


@settings(max_examples=60)
@given(seeds, st.integers(-6, 6), st.integers(-8, 8))
def test_telescoping_bound(seed, m, k):
    rng = np.random.default_rng(seed)
    S = random_metric_space(rng, 5)
    t = random_full_tslimit(5, rng)
    lhs, rhs = chain_bound(S, t, m, k)
    assert lhs <= rhs
    if k == 0:
        assert lhs == rhs == 0


def test_product_space_and_splitting(rng):
    S = product_space(DISCRETE2, PATH3)
    assert S.n == 6 and S.diameter == Fraction(1, 2)
    for _ in range(30):
        t1 = random_full_tslimit(2, rng)
        t2 = random_full_tslimit(3, rng)
        m = max(t1.m, t2.m)
        t1 = TsLimitPseudoOrbit(t1.left, t1.right, tuple(t1.term(i) for i in range(-m + 1, m)), m)
        t2 = TsLimitPseudoOrbit(t2.left, t2.right, tuple(t2.term(i) for i in range(-m + 1, m)), m)
        joined = TsLimitPseudoOrbit(join_points(t1.left, t2.left, 3), join_points(t1.right, t2.right, 3),
                                    tuple(join_points(a, b, 3) for a, b in zip(t1.middle, t2.middle)), m)
        assert split_pseudo_orbit(joined, 3) == (t1, t2)
        x = diagonal_shadow(joined)
        assert split_point(x, 3) == (diagonal_shadow(t1), diagonal_shadow(t2))
        for p in (1, 2, 3):
            verify_decay(S, joined, x, p, margin=decay_margin(p))
