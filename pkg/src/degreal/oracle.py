"""Brute-force references for tests. Never used by the library itself.

Ground truth is layered: labeled-graph enumeration (n <= 7) defines which
sequences are graphic; a plain recursive Havel-Hakimi, checked against the
enumeration in the test suite, covers n = 8. Nothing here calls the
Erdos-Gallai kernels.
"""

from __future__ import annotations

import itertools
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from ._jit import njit
from .core import as_intervals, as_sequence

MAX_ENUM_N = 7
MAX_BOX = 10**7


class Objective(str, Enum):
    EXISTS = "exists"
    MIN_SUM = "min_sum"
    MAX_SUM = "max_sum"
    MIN_DEVIATION = "min_deviation"
    MIN_SPREAD = "min_spread"


@lru_cache(maxsize=None)
def labeled_degree_table(n: int) -> np.ndarray:
    """Distinct degree vectors of all 2**(n(n-1)/2) labeled graphs on n vertices."""
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    deg = np.zeros((masks.size, n), dtype=np.int8)
    for e, (u, v) in enumerate(pairs):
        bit = ((masks >> e) & 1).astype(np.int8)
        deg[:, u] += bit
        deg[:, v] += bit
    table = np.unique(deg, axis=0).astype(np.int64)
    table.flags.writeable = False
    return table


def enum_graphic_multisets(n: int) -> frozenset:
    """Degree multisets (as non-increasing tuples) of all graphs on n vertices."""
    table = labeled_degree_table(n)
    return frozenset(tuple(sorted(row, reverse=True)) for row in table.tolist())


@lru_cache(maxsize=None)
def _hh(key: tuple) -> bool:
    d = list(key)
    while d and d[0] > 0:
        x = d.pop(0)
        if x > len(d):
            return False
        for i in range(x):
            d[i] -= 1
            if d[i] < 0:
                return False
        d.sort(reverse=True)
    return all(v == 0 for v in d)


def hh_graphic(d) -> bool:
    """Textbook Havel-Hakimi, memoized on the sorted sequence."""
    d = [int(v) for v in d]
    if any(v < 0 for v in d):
        return False
    return _hh(tuple(sorted(d, reverse=True)))


def _pairwise_spread(rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    total = np.zeros(rows.shape[0], dtype=np.int64)
    for r in range(n):
        for s in range(r + 1, n):
            total += np.abs(rows[:, r] - rows[:, s])
    return total


def _objective_value(objective, rows, lower, upper):
    if objective is Objective.MIN_SUM or objective is Objective.MAX_SUM or objective is Objective.EXISTS:
        return rows.sum(axis=1)
    if objective is Objective.MIN_SPREAD:
        return _pairwise_spread(rows)
    return (np.maximum(lower - rows, 0) + np.maximum(rows - upper, 0)).sum(axis=1)


def brute_force_box_search(S, objective: str | Objective) -> Optional[tuple[tuple, int]]:
    """Exact optimum over graphic sequences with a witness, or None.

    ``min_deviation`` searches all of [0, n-1]^n; the other objectives only
    the box. For ``exists`` the value is the witness sum.
    """
    S = as_intervals(S)
    objective = Objective(objective)
    n = S.n
    lower, upper = S.lower, S.upper
    if n <= MAX_ENUM_N:
        rows = labeled_degree_table(n)
        if objective is not Objective.MIN_DEVIATION:
            rows = rows[np.all((rows >= lower) & (rows <= upper), axis=1)]
    else:
        if objective is Objective.MIN_DEVIATION:
            ranges = [range(n)] * n
        else:
            ranges = [range(lo, hi + 1) for lo, hi in zip(lower.tolist(), upper.tolist())]
        size = 1
        for r in ranges:
            size *= len(r)
        if size > MAX_BOX:
            raise ValueError(f"search space {size} exceeds {MAX_BOX}")
        found = [d for d in itertools.product(*ranges) if hh_graphic(d)]
        rows = np.array(found, dtype=np.int64).reshape(len(found), n)
    if rows.shape[0] == 0:
        return None
    values = _objective_value(objective, rows, lower, upper)
    pick = int(np.argmax(values)) if objective is Objective.MAX_SUM else int(np.argmin(values))
    return tuple(int(v) for v in rows[pick]), int(values[pick])


def exhaustive_level(d, S) -> np.ndarray:
    """Apply in-box spread-reducing levellings until none is left.

    Each step takes the first pair (alpha, beta) in row-major order with
    d_alpha >= d_beta + 2 whose move stays inside the box.
    """
    S = as_intervals(S)
    d = as_sequence(d)
    if not S.contains(d):
        raise ValueError("sequence lies outside the box")
    n = d.size
    a, b = S.lower, S.upper
    budget = max(1, n) ** 3
    for _ in range(budget + 1):
        moved = False
        for alpha in range(n):
            if d[alpha] - 1 < a[alpha]:
                continue
            for beta in range(n):
                if d[alpha] >= d[beta] + 2 and d[beta] + 1 <= b[beta]:
                    d[alpha] -= 1
                    d[beta] += 1
                    moved = True
                    break
            if moved:
                break
        if not moved:
            return d
    raise AssertionError("levelling did not terminate within n^3 steps")


def is_levelled(d, S) -> bool:
    """No in-box levelling strictly lowers the spread (pairwise scan)."""
    S = as_intervals(S)
    d = as_sequence(d)
    a, b = S.lower, S.upper
    lowerable = d - 1 >= a
    raisable = d + 1 <= b
    if not lowerable.any() or not raisable.any():
        return True
    return not int(d[lowerable].max()) >= int(d[raisable].min()) + 2


@njit
def _scan_table(lowers, uppers, table, spreads, out):
    # out columns: exists, min_sum, max_sum, min_spread, min_deviation
    boxes, n = lowers.shape
    rows = table.shape[0]
    for q in range(boxes):
        found = 0
        lo_sum = 1 << 62
        hi_sum = -1
        lo_phi = 1 << 62
        lo_dev = 1 << 62
        for r in range(rows):
            dev = 0
            total = 0
            for i in range(n):
                v = table[r, i]
                total += v
                if v < lowers[q, i]:
                    dev += lowers[q, i] - v
                elif v > uppers[q, i]:
                    dev += v - uppers[q, i]
            if dev < lo_dev:
                lo_dev = dev
            if dev == 0:
                found = 1
                if total < lo_sum:
                    lo_sum = total
                if total > hi_sum:
                    hi_sum = total
                if spreads[r] < lo_phi:
                    lo_phi = spreads[r]
        out[q, 0] = found
        out[q, 1] = lo_sum if found else -1
        out[q, 2] = hi_sum if found else -1
        out[q, 3] = lo_phi if found else -1
        out[q, 4] = lo_dev


def batch_box_optima(lowers, uppers) -> np.ndarray:
    """Brute-force optima for many boxes of one size n <= 7.

    Returns an int64 array with one row per box: exists, min_sum, max_sum,
    min_spread, min_deviation (the middle three are -1 when no graphic
    sequence lies in the box).
    """
    lowers = np.ascontiguousarray(lowers, dtype=np.int64)
    uppers = np.ascontiguousarray(uppers, dtype=np.int64)
    table = np.ascontiguousarray(labeled_degree_table(lowers.shape[1]))
    spreads = _pairwise_spread(table)
    out = np.zeros((lowers.shape[0], 5), dtype=np.int64)
    _scan_table(lowers, uppers, table, spreads, out)
    return out


def brute_force_chebyshev(a) -> tuple[int, tuple]:
    """Least max-norm distance from ``a`` to a graphic sequence (n <= 7)."""
    a = as_sequence(a)
    rows = labeled_degree_table(a.size)
    dist = np.abs(rows - a).max(axis=1)
    pick = int(np.argmin(dist))
    return int(dist[pick]), tuple(int(v) for v in rows[pick])


def brute_force_relative(a) -> tuple[Fraction, tuple]:
    """Least eps with a graphic D, |d_i - a_i| <= eps * a_i (n <= 7)."""
    a = as_sequence(a)
    rows = labeled_degree_table(a.size)
    best = None
    for row in rows.tolist():
        need = Fraction(0)
        for d, x in zip(row, a.tolist()):
            if d == x:
                continue
            if x == 0:
                need = None
                break
            need = max(need, Fraction(abs(d - x), x))
        if need is not None and (best is None or need < best[0]):
            best = (need, tuple(row))
    return best


@lru_cache(maxsize=None)
def _extends_to(prefix: tuple, n: int) -> bool:
    extra = n - len(prefix)
    for tail in itertools.combinations_with_replacement(range(1, n), extra):
        if hh_graphic(prefix + tail):
            return True
    return False


def brute_force_extension(prefix) -> int:
    """Least n >= len(prefix) such that prefix plus n - len(prefix) entries >= 1 is graphic."""
    key = tuple(sorted(int(v) for v in as_sequence(prefix)))
    n = len(key)
    while not _extends_to(key, n):
        n += 1
    return n


MAX_BITMAP_N = 8


@njit
def _gray_degree_codes(n, pu, pv, out):
    # walk all edge subsets in Gray-code order, flagging each degree vector
    m = pu.shape[0]
    base = np.empty(n, dtype=np.int64)
    p = 1
    for i in range(n):
        base[i] = p
        p *= n
    deg = np.zeros(n, dtype=np.int64)
    code = 0
    out[0] = True
    present = np.zeros(m, dtype=np.bool_)
    for step in range(1, 1 << m):
        e = 0
        while not (step >> e) & 1:
            e += 1
        u = pu[e]
        v = pv[e]
        if present[e]:
            present[e] = False
            deg[u] -= 1
            deg[v] -= 1
            code -= base[u] + base[v]
        else:
            present[e] = True
            deg[u] += 1
            deg[v] += 1
            code += base[u] + base[v]
        out[code] = True


@lru_cache(maxsize=None)
def graphic_bitmap(n: int) -> np.ndarray:
    """Boolean array over base-n codes sum(d_i * n**i): True iff some labeled graph has degrees d."""
    if not 1 <= n <= MAX_BITMAP_N:
        raise ValueError(f"bitmap supports 1 <= n <= {MAX_BITMAP_N}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    pu = np.array([u for u, _ in pairs], dtype=np.int64)
    pv = np.array([v for _, v in pairs], dtype=np.int64)
    out = np.zeros(n**n, dtype=np.bool_)
    _gray_degree_codes(n, pu, pv, out)
    out.flags.writeable = False
    return out


def degree_code(d) -> int:
    n = len(d)
    return int(sum(int(v) * n**i for i, v in enumerate(d)))


@njit
def _scan_products(lowers, uppers, bitmap, out):
    # out columns: exists, min_sum, max_sum, min_spread
    boxes, n = lowers.shape
    d = np.empty(n, dtype=np.int64)
    base = np.empty(n, dtype=np.int64)
    p = 1
    for i in range(n):
        base[i] = p
        p *= n
    for q in range(boxes):
        found = 0
        lo_sum = 1 << 62
        hi_sum = -1
        lo_phi = 1 << 62
        code = 0
        total = 0
        for i in range(n):
            d[i] = lowers[q, i]
            code += d[i] * base[i]
            total += d[i]
        while True:
            if bitmap[code]:
                found = 1
                if total < lo_sum:
                    lo_sum = total
                if total > hi_sum:
                    hi_sum = total
                phi = 0
                for r in range(n):
                    for s in range(r + 1, n):
                        phi += abs(d[r] - d[s])
                if phi < lo_phi:
                    lo_phi = phi
            # mixed-radix increment over the box
            i = 0
            while i < n and d[i] == uppers[q, i]:
                code -= (d[i] - lowers[q, i]) * base[i]
                total -= d[i] - lowers[q, i]
                d[i] = lowers[q, i]
                i += 1
            if i == n:
                break
            d[i] += 1
            code += base[i]
            total += 1
        out[q, 0] = found
        out[q, 1] = lo_sum if found else -1
        out[q, 2] = hi_sum if found else -1
        out[q, 3] = lo_phi if found else -1


def batch_box_products(lowers, uppers) -> np.ndarray:
    """exists, min_sum, max_sum, min_spread per box by scanning each box (n <= 8).

    Membership comes from ``graphic_bitmap``; cost is the box volume.
    """
    lowers = np.ascontiguousarray(lowers, dtype=np.int64)
    uppers = np.ascontiguousarray(uppers, dtype=np.int64)
    bitmap = graphic_bitmap(lowers.shape[1])
    out = np.zeros((lowers.shape[0], 4), dtype=np.int64)
    _scan_products(lowers, uppers, bitmap, out)
    return out


@njit
def _scan_perturbations(seqs, table, scale, out):
    # out columns: min max-norm distance, min scaled relative tolerance (-1: none)
    count, n = seqs.shape
    for q in range(count):
        best_c = 1 << 62
        best_e = 1 << 62
        for r in range(table.shape[0]):
            c = 0
            e = 0
            for i in range(n):
                gap = abs(table[r, i] - seqs[q, i])
                if gap > c:
                    c = gap
                if gap > 0:
                    if seqs[q, i] == 0:
                        e = 1 << 62
                    elif e < (1 << 62):
                        need = gap * scale // seqs[q, i]
                        if need > e:
                            e = need
            if c < best_c:
                best_c = c
            if e < best_e:
                best_e = e
        out[q, 0] = best_c
        out[q, 1] = best_e if best_e < (1 << 62) else -1


def batch_perturbation_optima(seqs) -> tuple[np.ndarray, list]:
    """Least max-norm radius and least relative tolerance for many sequences of one size n <= 7."""
    seqs = np.ascontiguousarray(seqs, dtype=np.int64)
    n = seqs.shape[1]
    scale = math.lcm(*range(1, max(n, 2)))
    table = np.ascontiguousarray(labeled_degree_table(n))
    out = np.zeros((seqs.shape[0], 2), dtype=np.int64)
    _scan_perturbations(seqs, table, scale, out)
    return out[:, 0].copy(), [Fraction(int(v), scale) for v in out[:, 1]]
