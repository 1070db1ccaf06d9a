"""Sequence vocabulary: validation, statistics, spread, deviation, levelling.

Degree sequences are plain 1-D int64 numpy arrays. Positions in the public
API are 0-based; error messages name positions 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

MAX_N = 1 << 20


class SequenceError(ValueError):
    """Malformed degree or interval sequence."""


class NotRealizableError(ValueError):
    """The interval sequence admits no graphic sequence."""


class NotGraphicError(ValueError):
    """The degree sequence is not the degree sequence of a simple graph."""


class SequenceStats(NamedTuple):
    sum: int
    parity: int
    min: int
    max: int


class DeviationBreakdown(NamedTuple):
    lower: int
    upper: int
    total: int


def as_sequence(values, name="sequence") -> np.ndarray:
    """Copy ``values`` into a fresh non-negative int64 array."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise SequenceError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise SequenceError(f"{name} must contain integers")
    arr = arr.astype(np.int64, copy=True)
    bad = np.flatnonzero(arr < 0)
    if bad.size:
        raise SequenceError(f"{name}: negative entry {arr[bad[0]]} at position {bad[0] + 1}")
    return arr


def as_degrees(values, name="degree sequence") -> np.ndarray:
    """Like :func:`as_sequence` but also enforce ``d_i <= n - 1``."""
    arr = as_sequence(values, name)
    if arr.size == 0:
        raise SequenceError(f"{name} must be non-empty")
    bad = np.flatnonzero(arr > arr.size - 1)
    if bad.size:
        raise SequenceError(
            f"{name}: entry {arr[bad[0]]} at position {bad[0] + 1} exceeds n - 1 = {arr.size - 1}"
        )
    return arr


def _same_length(x, y):
    if x.size != y.size:
        raise SequenceError(f"length mismatch: {x.size} != {y.size}")


@dataclass(frozen=True, eq=False)
class IntervalSequence:
    """Degree bounds ``lower[i] <= d_i <= upper[i]`` with ``0 <= lower <= upper <= n-1``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = as_sequence(self.lower, "lower bounds")
        hi = as_sequence(self.upper, "upper bounds")
        _same_length(lo, hi)
        n = lo.size
        if n == 0:
            raise SequenceError("interval sequence must be non-empty")
        if n > MAX_N:
            raise SequenceError(f"n = {n} exceeds the supported maximum {MAX_N}")
        bad = np.flatnonzero(lo > hi)
        if bad.size:
            p = bad[0]
            raise SequenceError(f"interval {p + 1} is empty: [{lo[p]}, {hi[p]}]")
        bad = np.flatnonzero(hi > n - 1)
        if bad.size:
            p = bad[0]
            raise SequenceError(f"interval {p + 1}: upper bound {hi[p]} exceeds n - 1 = {n - 1}")
        lo.flags.writeable = False
        hi.flags.writeable = False
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "IntervalSequence":
        pairs = [tuple(p) for p in pairs]
        if any(len(p) != 2 for p in pairs):
            raise SequenceError("each interval must be a (lower, upper) pair")
        return cls([p[0] for p in pairs], [p[1] for p in pairs])

    @classmethod
    def full(cls, n: int) -> "IntervalSequence":
        return cls(np.zeros(n, dtype=np.int64), np.full(n, n - 1, dtype=np.int64))

    def __len__(self):
        return int(self.lower.size)

    @property
    def n(self) -> int:
        return int(self.lower.size)

    def pairs(self):
        return list(zip(self.lower.tolist(), self.upper.tolist()))

    def contains(self, d) -> bool:
        d = np.asarray(d)
        return d.shape == self.lower.shape and bool(np.all(self.lower <= d) and np.all(d <= self.upper))

    def width(self) -> int:
        """L1 distance between the bounds."""
        return int((self.upper - self.lower).sum())

    def __eq__(self, other):
        if not isinstance(other, IntervalSequence):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    def __hash__(self):
        return hash((self.lower.tobytes(), self.upper.tobytes()))

    def __repr__(self):
        return f"IntervalSequence({self.pairs()})"


def top(n: int) -> np.ndarray:
    """All entries n - 1: the degrees of the complete graph."""
    return np.full(n, n - 1, dtype=np.int64)


def bottom(n: int) -> np.ndarray:
    return np.zeros(n, dtype=np.int64)


def as_intervals(S) -> IntervalSequence:
    if isinstance(S, IntervalSequence):
        return S
    return IntervalSequence.from_pairs(S)


def sequence_stats(d) -> SequenceStats:
    d = as_sequence(d)
    if d.size == 0:
        raise SequenceError("sequence must be non-empty")
    total = int(d.sum())
    return SequenceStats(total, total % 2, int(d.min()), int(d.max()))


def l1_distance(x, y) -> int:
    x = as_sequence(x)
    y = as_sequence(y)
    _same_length(x, y)
    return int(np.abs(y - x).sum())


def spread(d) -> int:
    """Sum of |d_r - d_s| over all pairs r < s.

    Computed from the sorted order in O(n log n); exact in int64 up to
    n = 2**20 since every weight is at most 2n.
    """
    d = np.sort(as_sequence(d))
    n = d.size
    weights = 2 * np.arange(n, dtype=np.int64) - (n - 1)
    return int(np.dot(d, weights))


def deviation(d, S) -> DeviationBreakdown:
    d = as_sequence(d)
    S = as_intervals(S)
    _same_length(d, S.lower)
    lower = int(np.maximum(S.lower - d, 0).sum())
    upper = int(np.maximum(d - S.upper, 0).sum())
    return DeviationBreakdown(lower, upper, lower + upper)


def apply_levelling(d, alpha: int, beta: int) -> np.ndarray:
    """Move one unit from position ``alpha`` to position ``beta``.

    Requires ``alpha != beta`` and ``d[alpha] > d[beta]``.
    """
    d = as_sequence(d)
    n = d.size
    for p in (alpha, beta):
        if not 0 <= p < n:
            raise IndexError(f"position {p + 1} outside [1, {n}]")
    if alpha == beta:
        raise ValueError(f"levelling needs two distinct positions, got {alpha + 1} twice")
    if d[alpha] <= d[beta]:
        raise ValueError(
            f"levelling needs d[{alpha + 1}] > d[{beta + 1}], got {d[alpha]} <= {d[beta]}"
        )
    d[alpha] -= 1
    d[beta] += 1
    return d


def add_characteristic(d, members: Iterable[int]) -> np.ndarray:
    """``d + E_I``: increment every position in ``members``."""
    d = as_sequence(d)
    n = d.size
    idx = np.array(sorted(set(int(i) for i in members)), dtype=np.int64)
    if idx.size and (idx[0] < 0 or idx[-1] >= n):
        raise IndexError(f"index set must lie in [1, {n}]")
    d[idx] += 1
    bad = np.flatnonzero(d > n - 1)
    if bad.size:
        raise SequenceError(f"entry at position {bad[0] + 1} would exceed n - 1 = {n - 1}")
    return d
