import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from degreal.core import IntervalSequence
from degreal.oracle import brute_force_box_search, hh_graphic
from degreal.verify import (
    canonicalize,
    epsilon_vector,
    is_graphic,
    is_realizable,
    upper_bound_vector,
    xy_vectors,
)

from conftest import naive_xy, random_box


@pytest.mark.parametrize(
    "d, X, Y",
    [((3, 2, 2, 1), (0, 3, 5, 7, 8), (0, 3, 5, 7, 12)), ((0, 0), (0, 0, 0), (0, 0, 2)), ((1,), (0, 1), (0, 0))],
)
def test_xy_examples(d, X, Y):
    v = xy_vectors(d)
    assert tuple(v.X) == X and tuple(v.Y) == Y


@given(st.lists(st.integers(0, 30), min_size=1, max_size=30))
def test_xy_matches_definition(d):
    X, Y = naive_xy(d)
    v = xy_vectors(d)
    assert v.X.tolist() == X and v.Y.tolist() == Y
    assert xy_vectors(sorted(d, reverse=True), assume_sorted=True).Y.tolist() == Y


def test_xy_assume_sorted_rejects_unsorted():
    with pytest.raises(ValueError):
        xy_vectors([1, 2], assume_sorted=True)


@pytest.mark.parametrize("d, ok", [((0, 0, 0), True), ((1, 1, 1), False), ((3, 3, 1, 1), False), ((2, 2, 2), True), ((3, 0, 0), False)])
def test_is_graphic_examples(d, ok):
    assert is_graphic(d) is ok


@given(st.lists(st.integers(0, 9), min_size=1, max_size=9))
def test_is_graphic_matches_havel_hakimi(d):
    assert is_graphic(d) == hh_graphic(d)


@pytest.mark.parametrize(
    "pairs, eps",
    [([(1, 1)] * 3, [1, 0, 0, 0]), ([(0, 1)] * 2, [0, 0, 0]), ([(2, 2)] * 3, [0, 0, 0, 0])],
)
def test_epsilon_examples(pairs, eps):
    assert epsilon_vector(pairs).tolist() == eps


def test_epsilon_requires_canonical_order():
    with pytest.raises(ValueError):
        epsilon_vector([(0, 1), (1, 1)])


def _epsilon_definition(lo, hi):
    n = len(lo)
    out = []
    for k in range(n + 1):
        W = [i for i in range(k, n) if hi[i] >= k + 1]
        fixed = all(lo[i] == hi[i] for i in W)
        parity = (sum(hi[i] for i in W) + k * len(W)) % 2
        out.append(int(fixed and parity == 1))
    return out


def test_epsilon_matches_definition(rng):
    for _ in range(500):
        S, _ = canonicalize(random_box(rng, int(rng.integers(1, 9)), max_width=2))
        assert epsilon_vector(S).tolist() == _epsilon_definition(S.lower.tolist(), S.upper.tolist())


def test_canonicalize_order(rng):
    S = random_box(rng, 30)
    C, p = canonicalize(S)
    assert sorted(p.tolist()) == list(range(30))
    assert C.lower.tolist() == S.lower[p].tolist()
    keys = list(zip(C.lower.tolist(), C.upper.tolist()))
    assert keys == sorted(keys, reverse=True)


def test_upper_bound_vector_is_order_sensitive():
    def naive(b):
        n = len(b)
        return [k * (k - 1) + sum(min(v, k) for v in b[k:]) if k else 0 for k in range(n + 1)]

    for b in itertools.product(range(4), repeat=4):
        assert upper_bound_vector(b).tolist() == naive(list(b))


@pytest.mark.parametrize(
    "pairs, ok",
    [([(1, 1)] * 3, False), ([(1, 2)] * 3, True), ([(2, 2), (0, 0), (0, 0)], False), ([(0, 4)] * 5, True)],
)
def test_is_realizable_examples(pairs, ok):
    assert is_realizable(pairs) is ok


def test_is_realizable_matches_brute_force(rng):
    for _ in range(300):
        S = random_box(rng, int(rng.integers(1, 8)), max_width=3)
        assert is_realizable(S) == (brute_force_box_search(S, "exists") is not None)


def test_is_realizable_is_order_invariant(rng):
    for _ in range(200):
        S = random_box(rng, 12)
        p = rng.permutation(12)
        assert is_realizable(S) == is_realizable(IntervalSequence(S.lower[p], S.upper[p]))
