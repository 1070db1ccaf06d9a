"""Graphic certificates by bisection over levelled sequences.

For a realizable box (A, B) and any levelled C inside it, at least one of
(A, C) and (C, B) is realizable. Splitting at the levelled sequence of half
the current volume therefore halves L1(A, B) while keeping a realizable
box, and after O(log n) rounds the box holds at most two sequences.
Preferring the lower half gives a certificate with the fewest edges;
preferring the upper half gives the most.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import backend
from .core import DeviationBreakdown, IntervalSequence, as_intervals, deviation, top
from .levelled import levelled_degrees
from .verify import _realizable_arrays


class Mode(str, Enum):
    ANY = "any"
    SPARSEST = "sparsest"
    DENSEST = "densest"


@dataclass(frozen=True)
class CertificateResult:
    degrees: np.ndarray
    edge_count: int
    mode: Mode


@dataclass(frozen=True)
class DeviationCertificate:
    degrees: np.ndarray
    breakdown: DeviationBreakdown
    envelope: np.ndarray


def _graphic(d: np.ndarray) -> bool:
    k = backend.kernels()
    return bool(k.graphic_sorted(k.counting_sort_desc(d)))


def _bisect(lo: np.ndarray, hi: np.ndarray, dense: bool) -> np.ndarray:
    # lo/hi must bound a realizable box; both are consumed
    width = int((hi - lo).sum())
    while width >= 2:
        mid = levelled_degrees(lo, hi, width // 2)
        if dense:
            if _realizable_arrays(mid, hi):
                lo = mid
                width -= width // 2
            else:
                hi = mid
                width //= 2
        else:
            if _realizable_arrays(lo, mid):
                hi = mid
                width //= 2
            else:
                lo = mid
                width -= width // 2
    for cand in ((hi, lo) if dense else (lo, hi)):
        if _graphic(cand):
            return cand
    raise AssertionError("bisection lost realizability")  # unreachable for realizable input


def certificate(S, mode: str | Mode = Mode.ANY) -> Optional[CertificateResult]:
    """A graphic sequence inside S, or None if S is not realizable.

    ``sparsest`` minimises the edge count, ``densest`` maximises it and
    ``any`` behaves like ``sparsest``.
    """
    S = as_intervals(S)
    mode = Mode(mode)
    if not _realizable_arrays(S.lower, S.upper):
        return None
    d = _bisect(S.lower.copy(), S.upper.copy(), dense=mode is Mode.DENSEST)
    return CertificateResult(d, int(d.sum()) // 2, mode)


def deviation_envelope(S) -> np.ndarray:
    """Smallest-overflow upper envelope R >= B with (A, R) realizable."""
    S = as_intervals(S)
    lower = S.lower
    lo = S.upper.copy()
    hi = top(S.n)
    width = int((hi - lo).sum())
    while width >= 2:
        mid = levelled_degrees(lo, hi, width // 2)
        if _realizable_arrays(lower, mid):
            hi = mid
            width //= 2
        else:
            lo = mid
            width -= width // 2
    return lo if _realizable_arrays(lower, lo) else hi


def min_deviation_certificate(S) -> DeviationCertificate:
    """Graphic sequence of least total deviation from S.

    The result never falls below the lower bounds, so all of its deviation
    is overflow above the upper bounds, and it equals sum(envelope - upper).
    """
    S = as_intervals(S)
    envelope = deviation_envelope(S)
    d = _bisect(S.lower.copy(), envelope.copy(), dense=False)
    return DeviationCertificate(d, deviation(d, S), envelope)
