"""Linear-time graphicity and interval-realizability tests.

``is_graphic`` is the Erdos-Gallai test: a non-increasing D is graphic iff
sum(D) is even and X_k(D) <= Y_k(D) for every k, where

    X_k(D) = d_1 + ... + d_k
    Y_k(D) = k(k-1) + sum_{i>k} min(d_i, k).

``is_realizable`` is the interval version due to Cai, Deng and Zang: with
the intervals in canonical order (lower bounds non-increasing, ties by upper
bound non-increasing), (A, B) is realizable iff X_k(A) <= Y_k(B) - eps_k
for k = 0..n. The k = 0 row is what rejects boxes whose only candidate has
an odd sum; without it ([1,1],[1,1],[1,1]) would pass.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import backend
from .core import IntervalSequence, as_intervals, as_sequence


class VerifierVectors(NamedTuple):
    """X and Y indexed k = 0..n (both start at 0)."""

    X: np.ndarray
    Y: np.ndarray


def sort_desc(d) -> np.ndarray:
    return backend.kernels().counting_sort_desc(as_sequence(d))


def xy_vectors(d, assume_sorted: bool = False) -> VerifierVectors:
    d = as_sequence(d)
    if not assume_sorted:
        d = backend.kernels().counting_sort_desc(d)
    elif d.size > 1 and np.any(d[1:] > d[:-1]):
        raise ValueError("assume_sorted=True needs a non-increasing sequence")
    X, Y = backend.kernels().xy_sorted(d)
    return VerifierVectors(X, Y)


def is_graphic(d) -> bool:
    d = as_sequence(d)
    if d.size == 0:
        return True
    if int(d.max()) > d.size - 1:
        return False
    k = backend.kernels()
    return bool(k.graphic_sorted(k.counting_sort_desc(d)))


def canonical_order(S) -> np.ndarray:
    """Permutation p with (lower[p], upper[p]) in canonical order.

    ``p[j]`` is the original position of the j-th canonical interval.
    """
    S = as_intervals(S)
    return backend.kernels().canonical_order(S.lower, S.upper)


def canonicalize(S) -> tuple[IntervalSequence, np.ndarray]:
    S = as_intervals(S)
    p = canonical_order(S)
    return IntervalSequence(S.lower[p], S.upper[p]), p


def _is_canonical(lo, hi):
    if lo.size < 2:
        return True
    down = lo[1:] <= lo[:-1]
    tie = lo[1:] == lo[:-1]
    return bool(np.all(down) and np.all(~tie | (hi[1:] <= hi[:-1])))


def epsilon_vector(S) -> np.ndarray:
    """eps_k for k = 0..n of a canonically ordered interval sequence."""
    S = as_intervals(S)
    if not _is_canonical(S.lower, S.upper):
        raise ValueError("epsilon_vector needs canonical order; see canonicalize()")
    return backend.kernels().epsilon_canonical(S.lower, S.upper)


def upper_bound_vector(upper) -> np.ndarray:
    """Y_k(B) for k = 0..n, keeping B in the given (unsorted) order."""
    return backend.kernels().y_unsorted(as_sequence(upper))


def _realizable_arrays(lower, upper) -> bool:
    k = backend.kernels()
    p = k.canonical_order(lower, upper)
    return bool(k.realizable_canonical(lower[p], upper[p]))


def is_realizable(S) -> bool:
    """True iff some graphic sequence D satisfies lower <= D <= upper."""
    S = as_intervals(S)
    return _realizable_arrays(S.lower, S.upper)
