import numpy as np
import pytest

from degreal.core import IntervalSequence, NotRealizableError, spread
from degreal.oracle import brute_force_box_search
from degreal.regular import avoid_sets, level_scan_context, most_regular_certificate
from degreal.verify import is_graphic, xy_vectors

from conftest import pairwise_spread, random_box


@pytest.mark.parametrize(
    "pairs, value",
    [([(1, 3)] * 4, 0), ([(2, 2)] * 3, 0), ([(3, 3), (1, 2), (1, 2), (1, 2)], 6), ([(0, 0)], 0)],
)
def test_most_regular_examples(pairs, value):
    out = most_regular_certificate(pairs)
    assert out.spread == spread(out.degrees) == value
    assert is_graphic(out.degrees)


def test_most_regular_not_realizable():
    with pytest.raises(NotRealizableError):
        most_regular_certificate([(1, 1)] * 3)


def test_avoid_example():
    ctx = level_scan_context([(1, 3)] * 4, 1)
    assert (ctx.alpha, ctx.beta) == (0, 4)
    assert ctx.base.tolist() == [1, 1, 1, 1]
    for k in range(1, 5):
        assert avoid_sets(ctx, k) == (None, None)
    with pytest.raises(ValueError):
        avoid_sets(ctx, 0)


def test_most_regular_matches_brute_force(rng):
    for _ in range(400):
        S = random_box(rng, int(rng.integers(1, 7)))
        ref = brute_force_box_search(S, "min_spread")
        if ref is None:
            continue
        out = most_regular_certificate(S)
        assert S.contains(out.degrees) and is_graphic(out.degrees)
        assert out.spread == ref[1] == pairwise_spread(out.degrees)


def _violates(d, k):
    X, Y = xy_vectors(d)
    return X[k] > Y[k]


def test_avoid_sets_match_definition(rng):
    for _ in range(300):
        n = int(rng.integers(1, 9))
        S = random_box(rng, n)
        for z in range(int(S.lower.min()), int(S.upper.max())):
            ctx = level_scan_context(S, z)
            for k in range(1, n + 1):
                windows = [w for w in avoid_sets(ctx, k) if w is not None]
                for i in range(ctx.alpha, ctx.beta + 1):
                    covered = any(lo <= i <= hi for lo, hi in windows)
                    assert covered == _violates(ctx.candidate(i), k), (S, z, k, i)


def test_spread_recurrences(rng):
    for _ in range(300):
        n = int(rng.integers(1, 9))
        S = random_box(rng, n)
        zs = list(range(int(S.lower.min()), int(S.upper.max())))
        prev = None
        for z in zs:
            ctx = level_scan_context(S, z)
            assert ctx.base_spread == pairwise_spread(ctx.base)
            a, b = ctx.alpha, ctx.beta
            for i in range(a, b + 1):
                assert pairwise_spread(ctx.candidate(i)) == ctx.base_spread + (i - a) * (n - i - a)
            if prev is not None:
                pa, pb = prev.alpha, prev.beta
                assert ctx.base_spread == prev.base_spread + (pb - pa) * (n - pb - pa)
            prev = ctx
        if zs:
            assert level_scan_context(S, zs[0]).base_spread == pairwise_spread(S.lower)


def test_candidate_range_checked():
    ctx = level_scan_context([(1, 3)] * 4, 1)
    with pytest.raises(ValueError):
        ctx.candidate(5)


def test_most_regular_prefers_smallest_volume():
    # (3,1,1,1) and (3,2,2,1) both have spread 6
    out = most_regular_certificate([(3, 3), (1, 2), (1, 2), (1, 2)])
    assert out.degrees.tolist() == [3, 1, 1, 1]


def test_most_regular_large_box():
    n = 400
    S = IntervalSequence(np.zeros(n, dtype=np.int64), np.full(n, n - 1))
    assert most_regular_certificate(S).spread == 0
