"""Extension and perturbation problems reduced to interval realizability.

* ``min_graphic_extension``: append the fewest vertices (each of degree at
  least 1) so that a fixed prefix becomes graphic.
* ``min_chebyshev``: nearest graphic sequence in the L-infinity sense.
* ``min_relative_epsilon``: smallest relative tolerance eps with a graphic
  D satisfying a_i(1-eps) <= d_i <= a_i(1+eps).

Each one binary-searches a monotone family of boxes with the linear-time
realizability test and then asks ``certificate`` for a witness. Minimality
is re-checked on every call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from .certify import certificate
from .core import IntervalSequence, SequenceError, as_degrees, as_sequence
from .verify import is_realizable


@dataclass(frozen=True)
class ExtensionResult:
    n0: int
    degrees: np.ndarray


@dataclass(frozen=True)
class PerturbationResult:
    radius: Union[int, Fraction]
    degrees: np.ndarray


def _first_true(items: Sequence, pred: Callable) -> int:
    """Index of the first item satisfying a monotone predicate (last one must hold)."""
    lo, hi = 0, len(items) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(items[mid]):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _extension_box(prefix: np.ndarray, n: int) -> IntervalSequence | None:
    p = prefix.size
    if n < p or (p and int(prefix.max()) > n - 1):
        return None
    extra = n - p
    lower = np.concatenate((prefix, np.ones(extra, dtype=np.int64)))
    upper = np.concatenate((prefix, np.full(extra, n - 1, dtype=np.int64)))
    return IntervalSequence(lower, upper)


def _extension_feasible(prefix, n) -> bool:
    box = _extension_box(prefix, n)
    return box is not None and is_realizable(box)


def min_graphic_extension(prefix) -> ExtensionResult:
    """Shortest graphic sequence starting with ``prefix``.

    Appended vertices take degrees in [1, n - 1]. The answer lies in
    [max(p, M), p + M] for p = len(prefix) and M = max(prefix): the upper
    end is always reachable with a bipartite graph.
    """
    a = as_sequence(prefix, "prefix")
    p = a.size
    if p == 0:
        raise SequenceError("prefix must be non-empty")
    top = int(a.max())
    start = max(p, top)
    if _extension_feasible(a, p):
        n0 = p
    else:
        # beyond n = p, realizable at n implies realizable at n + 1
        # (hang a new leaf on any appended vertex)
        window = list(range(max(p + 1, top + 1), p + top + 1))
        n0 = window[_first_true(window, lambda n: _extension_feasible(a, n))]
        if n0 - 1 >= start and _extension_feasible(a, n0 - 1):
            n0 = next(n for n in range(start, p + top + 1) if _extension_feasible(a, n))
    if n0 - 1 >= start and _extension_feasible(a, n0 - 1):
        raise AssertionError(f"extension length {n0} is not minimal")
    result = certificate(_extension_box(a, n0))
    return ExtensionResult(n0, result.degrees)


def _chebyshev_box(a: np.ndarray, c: int) -> IntervalSequence:
    n = a.size
    return IntervalSequence(np.maximum(a - c, 0), np.minimum(a + c, n - 1))


def min_chebyshev(a) -> PerturbationResult:
    """Smallest c such that some graphic D has max|d_i - a_i| <= c."""
    a = as_degrees(a)
    radii = list(range(a.size))
    c = radii[_first_true(radii, lambda c: is_realizable(_chebyshev_box(a, c)))]
    if c > 0 and is_realizable(_chebyshev_box(a, c - 1)):
        raise AssertionError(f"radius {c} is not minimal")
    return PerturbationResult(c, certificate(_chebyshev_box(a, c)).degrees)


def _relative_box(a: np.ndarray, eps: Fraction) -> IntervalSequence:
    n = a.size
    lower = [max(0, math.ceil(int(x) * (1 - eps))) for x in a]
    upper = [min(n - 1, math.floor(int(x) * (1 + eps))) for x in a]
    return IntervalSequence(lower, upper)


def relative_candidates(a) -> list[Fraction]:
    """Every eps at which some interval of the relative box changes."""
    a = as_degrees(a)
    n = a.size
    cands = {Fraction(0)}
    for x in set(int(v) for v in a if v > 0):
        cands.update(Fraction(abs(k - x), x) for k in range(n))
    return sorted(cands)


def min_relative_epsilon(a) -> PerturbationResult:
    """Smallest eps such that some graphic D has a_i(1-eps) <= d_i <= a_i(1+eps).

    eps = 1 always works (the empty graph), so the answer is at most 1.
    """
    a = as_degrees(a)
    cands = [e for e in relative_candidates(a) if e <= 1]
    j = _first_true(cands, lambda e: is_realizable(_relative_box(a, e)))
    eps = cands[j]
    if j > 0 and is_realizable(_relative_box(a, cands[j - 1])):
        raise AssertionError(f"epsilon {eps} is not minimal")
    return PerturbationResult(eps, certificate(_relative_box(a, eps)).degrees)
