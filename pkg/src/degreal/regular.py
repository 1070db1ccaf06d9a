"""Most regular certificate: minimum spread over graphic sequences in a box.

Levelling never raises spread and keeps graphic sequences graphic, so some
optimum is levelled. Every levelled sequence with level in [z, z+1] is a
permutation of

    D_z + E_[alpha+1, i],   alpha <= i <= beta,

where D_z holds a_i for a_i >= z+1 (sorted), z for the middle block, and
b_i for b_i <= z (sorted), and the first i - alpha middle entries are
raised to z+1. For fixed z the raise ends i that break the k-th
Erdos-Gallai inequality form at most two windows per k, so each level
costs O(n) and the scan over all z costs O(n^2). Spreads come from the
recurrences

    phi(D_z + E_[alpha+1, i]) = phi(D_z) + (i - alpha)(n - i - alpha)
    phi(D_{z+1})              = phi(D_z) + (beta - alpha)(n - beta - alpha)

seeded with phi(D_{min A}) = phi(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .core import NotRealizableError, as_intervals, spread
from .verify import VerifierVectors, _realizable_arrays


@dataclass(frozen=True)
class LevelScanContext:
    z: int
    alpha: int
    beta: int
    base: np.ndarray
    vectors: VerifierVectors
    base_spread: int
    order: np.ndarray

    @property
    def n(self) -> int:
        return int(self.base.size)

    def candidate(self, i: int) -> np.ndarray:
        """D_z + E_[alpha+1, i] in scan order (1-based raise end i)."""
        if not self.alpha <= i <= self.beta:
            raise ValueError(f"raise end {i} outside [{self.alpha}, {self.beta}]")
        d = self.base.copy()
        d[self.alpha : i] += 1
        return d


@dataclass(frozen=True)
class RegularResult:
    degrees: np.ndarray
    spread: int
    level: int
    raised: int


def level_scan_context(S, z: int, base_spread: Optional[int] = None) -> LevelScanContext:
    """Partition and base sequence D_z for one level z.

    ``order`` lists original positions in scan order: upper block by lower
    bound descending, middle block by position, lower block by upper bound
    descending (ties by position throughout).
    """
    S = as_intervals(S)
    a, b = S.lower, S.upper
    pos = np.arange(S.n)
    high = pos[a >= z + 1]
    mid = pos[(a <= z) & (b >= z + 1)]
    low = pos[b <= z]
    high = high[np.argsort(-a[high], kind="stable")]
    low = low[np.argsort(-b[low], kind="stable")]
    order = np.concatenate((high, mid, low))
    base = np.concatenate((a[high], np.full(mid.size, z, dtype=np.int64), b[low]))
    X, Y = backend.kernels().xy_sorted(base)
    phi = spread(base) if base_spread is None else int(base_spread)
    return LevelScanContext(
        int(z), int(high.size), int(high.size + mid.size), base, VerifierVectors(X, Y), phi, order
    )


def avoid_sets(ctx: LevelScanContext, k: int):
    """Two windows of raise ends i in [alpha, beta] breaking inequality k.

    Returns ``((lo1, hi1), (lo2, hi2))``; a window is None when empty. The
    first covers i <= k (only X_k moves), the second i >= k.
    """
    if not 1 <= k <= ctx.n:
        raise ValueError(f"k = {k} outside [1, {ctx.n}]")
    X, Y = ctx.vectors
    lo1, hi1, lo2, hi2 = backend.kernels().avoid_bounds(
        k, int(X[k]), int(Y[k]), ctx.alpha, ctx.beta, ctx.z
    )
    first = (int(lo1), int(hi1)) if lo1 <= hi1 else None
    second = (int(lo2), int(hi2)) if lo2 <= hi2 else None
    return first, second


def most_regular_certificate(S) -> RegularResult:
    """Graphic sequence in S with the smallest spread.

    Ties go to the smallest volume. Raises NotRealizableError when S admits
    no graphic sequence.
    """
    S = as_intervals(S)
    a, b = S.lower, S.upper
    if not _realizable_arrays(a, b):
        raise NotRealizableError("interval sequence is not realizable")
    zlo = int(a.min())
    zhi = int(b.max()) - 1
    if zlo > zhi:
        # every interval is the same single value
        d = a.copy()
        return RegularResult(d, 0, zlo, 0)
    k = backend.kernels()
    a_desc = k.counting_sort_desc(a)
    b_desc = k.counting_sort_desc(b)
    best, z, t = k.regular_scan(a_desc, b_desc, zlo, zhi, spread(a))
    if t < 0:
        raise AssertionError("no levelled candidate is graphic")  # excluded by realizability
    z, t = int(z), int(t)
    d = np.clip(np.full(S.n, z, dtype=np.int64), a, b)
    mid = np.flatnonzero((a <= z) & (b >= z + 1))
    d[mid[:t]] += 1
    return RegularResult(d, int(best), z, t)
