"""Pure-numpy versions of the kernels in ``_loops``.

Same signatures and results; selected with ``DEGREAL_NO_NUMBA=1`` or
``degreal.backend.use("numpy")``. Havel-Hakimi has no vectorized form and
runs the uncompiled loop kernel instead.
"""

import numpy as np

from . import _loops

_I64 = np.int64


def counting_sort_desc(d):
    if d.size == 0:
        return d.copy()
    hist = np.bincount(d)
    values = np.arange(hist.size - 1, -1, -1, dtype=_I64)
    return np.repeat(values, hist[::-1])


def canonical_order(a, b):
    # lexsort is stable, so ties keep ascending position like the counting sort
    return np.lexsort((-b, -a)).astype(_I64)


def xy_sorted(d):
    n = d.size
    X = np.zeros(n + 1, dtype=_I64)
    np.cumsum(d, out=X[1:])
    suffix = np.zeros(n + 1, dtype=_I64)
    suffix[:n] = np.cumsum(d[::-1])[::-1]
    k = np.arange(n + 1, dtype=_I64)
    # j[k] = #{i : d_i >= k}
    hist = np.bincount(np.clip(d, 0, n + 1), minlength=n + 2)
    j = np.cumsum(hist[::-1])[::-1][: n + 1].astype(_I64)
    m = np.maximum(k, j)
    Y = k * (k - 1) + k * (m - k) + suffix[m]
    Y[0] = 0
    return X, Y


def graphic_sorted(d):
    n = d.size
    if n == 0:
        return True
    if d[-1] < 0 or d[0] > n - 1 or int(d.sum()) % 2 == 1:
        return False
    X, Y = xy_sorted(d)
    return bool(np.all(X <= Y))


def _range_add(starts, stops, values, size):
    # add values[p] on [starts[p], stops[p]) and return the running totals
    diff = np.zeros(size + 1, dtype=_I64)
    np.add.at(diff, starts, values)
    np.add.at(diff, stops, -values)
    return np.cumsum(diff[:size])


def y_unsorted(b):
    n = b.size
    i = np.arange(1, n + 1, dtype=_I64)
    k = np.arange(n + 1, dtype=_I64)
    zeros = np.zeros(n, dtype=_I64)
    c = _range_add(zeros, np.minimum(b, i - 1) + 1, np.ones(n, dtype=_I64), n + 1)
    has = b + 1 <= i - 1
    s = _range_add(b[has] + 1, i[has], b[has], n + 1)
    return k * (k - 1) + k * c + s


def epsilon_canonical(a, b):
    n = a.size
    i = np.arange(1, n + 1, dtype=_I64)
    m = np.minimum(i, b)
    zeros = np.zeros(n, dtype=_I64)
    c = _range_add(zeros, m, np.ones(n, dtype=_I64), n + 1)
    s = _range_add(zeros, m, b, n + 1)
    f = _range_add(zeros, m, (a < b).astype(_I64), n + 1)
    k = np.arange(n + 1, dtype=_I64)
    return ((f == 0) & ((s + k * c) % 2 == 1)).astype(_I64)


def realizable_canonical(a, b):
    n = a.size
    X = np.zeros(n + 1, dtype=_I64)
    np.cumsum(a, out=X[1:])
    return bool(np.all(X <= y_unsorted(b) - epsilon_canonical(a, b)))


def levelled(a, b, volume):
    n = a.size
    top = int(b.max()) if n else 0
    ha = np.bincount(a, minlength=n + 1)
    hb = np.bincount(b, minlength=n + 1)
    q = np.zeros(top + 1, dtype=_I64)
    q[1:] = np.cumsum(ha[:top] - hb[:top])
    fill = np.cumsum(q)
    f = rem = 0
    slope = 1
    if volume > 0:
        m = int(np.searchsorted(fill, volume, side="left"))
        if fill[m] == volume:
            f = m
        else:
            f = m - 1
            rem = int(volume - fill[m - 1])
            slope = int(q[m])
    d = np.clip(np.full(n, f, dtype=_I64), a, b)
    eligible = (a <= f) & (b > f)
    raise_ = eligible & (np.cumsum(eligible) <= rem)
    d[raise_] += 1
    return d, f, rem, slope


avoid_bounds = getattr(_loops.avoid_bounds, "py_func", _loops.avoid_bounds)


def regular_scan(a_desc, b_desc, zlo, zhi, phi0):
    n = a_desc.size
    k = np.arange(1, n + 1, dtype=_I64)
    pos = np.arange(n + 1, dtype=_I64)
    a_asc = a_desc[::-1]
    b_asc = b_desc[::-1]
    best, best_z, best_t = 0, -1, -1
    phi = int(phi0)
    for z in range(zlo, zhi + 1):
        alpha = n - int(np.searchsorted(a_asc, z + 1, side="left"))
        beta = n - int(np.searchsorted(b_asc, z, side="right"))
        D = np.concatenate((a_desc[:alpha], np.full(beta - alpha, z, dtype=_I64), b_desc[beta:]))
        X, Y = xy_sorted(D)
        x = X[1:]
        y = Y[1:]
        lo1 = np.maximum(alpha, alpha + 1 + y - x)
        hi1 = np.minimum(beta, k)
        over = np.maximum(k - alpha, 0)
        base = x + over
        lo2 = np.maximum(k, alpha)
        hi2 = np.minimum(beta, lo2 + over + x - y - 1)
        hi2 = np.where((base > y) & (k <= z), beta, hi2)
        hi2 = np.where(base <= y, lo2 - 1, hi2)
        diff = np.zeros(n + 2, dtype=_I64)
        for lo, hi in ((lo1, hi1), (lo2, hi2)):
            keep = lo <= hi
            np.add.at(diff, lo[keep], 1)
            np.add.at(diff, hi[keep] + 1, -1)
        covered = np.cumsum(diff)[: n + 1] > 0
        i = pos[alpha : beta + 1]
        ok = ~covered[alpha : beta + 1] & ((X[n] + i - alpha) % 2 == 0)
        if ok.any():
            cand = phi + (i - alpha) * (n - i - alpha)
            cand = np.where(ok, cand, np.iinfo(_I64).max)
            w = int(np.argmin(cand))
            if best_t < 0 or cand[w] < best:
                best, best_z, best_t = int(cand[w]), z, w
        phi += (beta - alpha) * (n - beta - alpha)
    return best, best_z, best_t


def havel_hakimi(deg):
    fn = getattr(_loops.havel_hakimi, "py_func", _loops.havel_hakimi)
    return fn(deg)
