"""Loop kernels, compiled with numba when available.

Every kernel works on int64 arrays and uses 0-based positions internally.
Anything that takes an order-sensitive input says so in its name
(``*_sorted`` means non-increasing, ``*_canonical`` means the (a desc,
b desc) order used by the interval test).
"""

import numpy as np

from ._jit import njit


@njit
def counting_sort_desc(d):
    n = d.shape[0]
    if n == 0:
        return d.copy()
    top = 0
    for i in range(n):
        if d[i] > top:
            top = d[i]
    hist = np.zeros(top + 1, dtype=np.int64)
    for i in range(n):
        hist[d[i]] += 1
    out = np.empty(n, dtype=np.int64)
    p = 0
    for v in range(top, -1, -1):
        for _ in range(hist[v]):
            out[p] = v
            p += 1
    return out


@njit
def _stable_desc_positions(keys, order, top):
    # stable counting sort of ``order`` by keys[order] descending
    n = order.shape[0]
    hist = np.zeros(top + 2, dtype=np.int64)
    for i in range(n):
        hist[top - keys[order[i]] + 1] += 1
    for v in range(1, top + 2):
        hist[v] += hist[v - 1]
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        slot = top - keys[order[i]]
        out[hist[slot]] = order[i]
        hist[slot] += 1
    return out


@njit
def canonical_order(a, b):
    n = a.shape[0]
    top = 0
    for i in range(n):
        if b[i] > top:
            top = b[i]
    order = np.arange(n)
    order = _stable_desc_positions(b, order, top)
    return _stable_desc_positions(a, order, top)


@njit
def xy_sorted(d):
    n = d.shape[0]
    X = np.zeros(n + 1, dtype=np.int64)
    Y = np.zeros(n + 1, dtype=np.int64)
    suffix = np.zeros(n + 1, dtype=np.int64)
    for m in range(n - 1, -1, -1):
        suffix[m] = suffix[m + 1] + d[m]
    j = n
    for k in range(1, n + 1):
        X[k] = X[k - 1] + d[k - 1]
        while j > 0 and d[j - 1] < k:
            j -= 1
        m = k if k > j else j
        Y[k] = k * (k - 1) + k * (m - k) + suffix[m]
    return X, Y


@njit
def graphic_sorted(d):
    n = d.shape[0]
    if n == 0:
        return True
    if d[n - 1] < 0 or d[0] > n - 1:
        return False
    total = 0
    for i in range(n):
        total += d[i]
    if total % 2 == 1:
        return False
    X, Y = xy_sorted(d)
    for k in range(1, n + 1):
        if X[k] > Y[k]:
            return False
    return True


@njit
def y_unsorted(b):
    """Y_k(B) = k(k-1) + sum_{i>k} min(b_i, k) for an arbitrary order of B."""
    n = b.shape[0]
    cnt = np.zeros(n + 2, dtype=np.int64)
    cst = np.zeros(n + 2, dtype=np.int64)
    for p in range(n):
        i = p + 1
        bi = b[p]
        u = bi if bi < i - 1 else i - 1
        cnt[0] += 1
        cnt[u + 1] -= 1
        if bi + 1 <= i - 1:
            cst[bi + 1] += bi
            cst[i] -= bi
    Y = np.zeros(n + 1, dtype=np.int64)
    c = 0
    s = 0
    for k in range(n + 1):
        c += cnt[k]
        s += cst[k]
        Y[k] = k * (k - 1) + k * c + s
    return Y


@njit
def epsilon_canonical(a, b):
    n = a.shape[0]
    wc = np.zeros(n + 2, dtype=np.int64)
    ws = np.zeros(n + 2, dtype=np.int64)
    wf = np.zeros(n + 2, dtype=np.int64)
    for p in range(n):
        i = p + 1
        m = i if i < b[p] else b[p]
        if m >= 1:
            wc[0] += 1
            wc[m] -= 1
            ws[0] += b[p]
            ws[m] -= b[p]
            if a[p] < b[p]:
                wf[0] += 1
                wf[m] -= 1
    eps = np.zeros(n + 1, dtype=np.int64)
    c = 0
    s = 0
    f = 0
    for k in range(n + 1):
        c += wc[k]
        s += ws[k]
        f += wf[k]
        if f == 0 and (s + k * c) % 2 == 1:
            eps[k] = 1
    return eps


@njit
def realizable_canonical(a, b):
    n = a.shape[0]
    Y = y_unsorted(b)
    eps = epsilon_canonical(a, b)
    x = 0
    if 0 > Y[0] - eps[0]:
        return False
    for k in range(1, n + 1):
        x += a[k - 1]
        if x > Y[k] - eps[k]:
            return False
    return True


@njit
def levelled(a, b, volume):
    """Fill to ``volume``; returns (degrees, floor level, remainder, slope).

    The exact level is floor + remainder / slope (remainder == 0 when the
    level is an integer, and then slope is 1).
    """
    n = a.shape[0]
    ha = np.zeros(n + 1, dtype=np.int64)
    hb = np.zeros(n + 1, dtype=np.int64)
    top = 0
    for i in range(n):
        ha[a[i]] += 1
        hb[b[i]] += 1
        if b[i] > top:
            top = b[i]
    f = 0
    rem = 0
    slope = 1
    if volume > 0:
        q = 0
        fill = 0
        for k in range(1, top + 1):
            q += ha[k - 1] - hb[k - 1]
            if fill + q >= volume:
                if fill + q == volume:
                    f = k
                else:
                    f = k - 1
                    rem = volume - fill
                    slope = q
                break
            fill += q
    d = np.empty(n, dtype=np.int64)
    left = rem
    for i in range(n):
        if a[i] > f:
            d[i] = a[i]
        elif b[i] <= f:
            d[i] = b[i]
        elif left > 0:
            d[i] = f + 1
            left -= 1
        else:
            d[i] = f
    return d, f, rem, slope


@njit
def avoid_bounds(k, x, y, alpha, beta, z):
    """Raise-count windows [lo1, hi1], [lo2, hi2] violating inequality k.

    Positions are 1-based raise ends i in [alpha, beta]; an empty window has
    lo > hi.
    """
    lo1 = alpha + 1 + y - x
    if lo1 < alpha:
        lo1 = alpha
    hi1 = k if k < beta else beta
    over = k - alpha if k > alpha else 0
    base = x + over
    lo2 = k if k > alpha else alpha
    if base > y and k <= z:
        hi2 = beta
    elif base <= y:
        lo2 = 1
        hi2 = 0
    else:
        top = (k if k > alpha else alpha) + over + x - y - 1
        hi2 = top if top < beta else beta
    return lo1, hi1, lo2, hi2


@njit
def regular_scan(a_desc, b_desc, zlo, zhi, phi0):
    """Best (spread, z, raised) over all levelled in-box candidates; raised=-1 if none."""
    n = a_desc.shape[0]
    D = np.empty(n, dtype=np.int64)
    suffix = np.zeros(n + 1, dtype=np.int64)
    X = np.zeros(n + 1, dtype=np.int64)
    Y = np.zeros(n + 1, dtype=np.int64)
    diff = np.zeros(n + 2, dtype=np.int64)
    best = 0
    best_z = -1
    best_t = -1
    phi = phi0
    pa = n
    pb = n
    for z in range(zlo, zhi + 1):
        while pa > 0 and a_desc[pa - 1] < z + 1:
            pa -= 1
        while pb > 0 and b_desc[pb - 1] <= z:
            pb -= 1
        alpha = pa
        beta = pb
        for p in range(n):
            if p < alpha:
                D[p] = a_desc[p]
            elif p < beta:
                D[p] = z
            else:
                D[p] = b_desc[p]
        for m in range(n - 1, -1, -1):
            suffix[m] = suffix[m + 1] + D[m]
        j = n
        for k in range(1, n + 1):
            X[k] = X[k - 1] + D[k - 1]
            while j > 0 and D[j - 1] < k:
                j -= 1
            m = k if k > j else j
            Y[k] = k * (k - 1) + k * (m - k) + suffix[m]
        for p in range(n + 2):
            diff[p] = 0
        for k in range(1, n + 1):
            lo1, hi1, lo2, hi2 = avoid_bounds(k, X[k], Y[k], alpha, beta, z)
            if lo1 <= hi1:
                diff[lo1] += 1
                diff[hi1 + 1] -= 1
            if lo2 <= hi2:
                diff[lo2] += 1
                diff[hi2 + 1] -= 1
        total = X[n]
        cover = 0
        for i in range(beta + 1):
            cover += diff[i]
            if i >= alpha and cover == 0 and (total + i - alpha) % 2 == 0:
                cand = phi + (i - alpha) * (n - i - alpha)
                if best_t < 0 or cand < best:
                    best = cand
                    best_z = z
                    best_t = i - alpha
        phi += (beta - alpha) * (n - beta - alpha)
    return best, best_z, best_t


@njit
def _first_at_most(res, arr, lo, hi, x):
    # first position p in [lo, hi] with res[arr[p]] <= x; arr is sorted by res desc
    while lo < hi:
        mid = (lo + hi) // 2
        if res[arr[mid]] <= x:
            hi = mid
        else:
            lo = mid + 1
    return lo


@njit
def _last_at_least(res, arr, lo, hi, x):
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if res[arr[mid]] >= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


@njit
def havel_hakimi(deg):
    """Edges (u < v, 0-based, unsorted) and an ok flag."""
    n = deg.shape[0]
    res = deg.copy()
    total = 0
    top = 0
    for i in range(n):
        total += res[i]
        if res[i] > top:
            top = res[i]
    edges = np.empty((total // 2, 2), dtype=np.int64)
    if total % 2 == 1:
        return edges, False
    arr = _stable_desc_positions(res, np.arange(n), top)
    e = 0
    s = 0
    while s < n:
        v = arr[s]
        dv = res[v]
        if dv == 0:
            break
        s += 1
        if dv > n - s:
            return edges, False
        last = s + dv - 1
        x = res[arr[last]]
        if x == 0:
            return edges, False
        p = _first_at_most(res, arr, s, last, x)
        q = _last_at_least(res, arr, last, n - 1, x)
        c = last - p + 1
        res[v] = 0
        for t in range(s, p):
            w = arr[t]
            res[w] -= 1
            edges[e, 0] = v if v < w else w
            edges[e, 1] = w if v < w else v
            e += 1
        for t in range(q - c + 1, q + 1):
            w = arr[t]
            res[w] -= 1
            edges[e, 0] = v if v < w else w
            edges[e, 1] = w if v < w else v
            e += 1
    if e != edges.shape[0]:
        return edges, False
    return edges, True
