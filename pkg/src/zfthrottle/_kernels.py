"""Numba kernels for the exhaustive searches.

Adjacency rows are ``int64`` bitmasks, so kernels handle ``n <= KERNEL_MAX_N``.
All kernels are ``nogil`` and may be run from worker threads.
"""
import math

import numpy as np
from numba import njit

KERNEL_MAX_N = 62
NO_PT = -1


@njit(cache=True, nogil=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def floor_bound(n):
    """Smallest integer t with (t + 1)**2 >= 4n, i.e. ceil(2*sqrt(n) - 1)."""
    if n <= 0:
        return 0
    s = int(math.sqrt(4.0 * n))
    while s * s > 4 * n:
        s -= 1
    while s * s < 4 * n:
        s += 1
    return s - 1


@njit(cache=True, nogil=True)
def greedy_pt(out, n, blue, cap):
    """Rounds of simultaneous forcing from ``blue``; NO_PT if stuck or over ``cap``."""
    full = (np.int64(1) << n) - 1
    t = 0
    while blue != full:
        if t >= cap:
            return NO_PT
        new = np.int64(0)
        for u in range(n):
            if (blue >> u) & 1:
                w = out[u] & ~blue
                if w != 0 and (w & (w - 1)) == 0:
                    new |= w
        if new == 0:
            return NO_PT
        blue |= new
        t += 1
    return t


@njit(cache=True, nogil=True)
def _forced_and_seeded(out, inn, n):
    """Return (mandatory mask, leaf lower bound on |B|).

    Mandatory = all sources plus, within each class of interchangeable
    non-source leaves hanging off the same vertex, all but the lowest index.
    """
    sources = np.int64(0)
    for v in range(n):
        if inn[v] == 0:
            sources |= np.int64(1) << v
    leaves_of = np.zeros(n, dtype=np.int64)
    src_leaves_of = np.zeros(n, dtype=np.int64)
    sink_cls = np.zeros(n, dtype=np.int64)
    dbl_cls = np.zeros(n, dtype=np.int64)
    for v in range(n):
        und = out[v] | inn[v]
        if und != 0 and (und & (und - 1)) == 0:
            u = 0
            while not (und >> u) & 1:
                u += 1
            leaves_of[u] += 1
            if inn[v] == 0:
                src_leaves_of[u] += 1
            elif out[v] == 0:
                sink_cls[u] |= np.int64(1) << v
            else:
                dbl_cls[u] |= np.int64(1) << v
    mandatory = sources
    bound = popcount(sources)
    for u in range(n):
        extra = leaves_of[u] - 1 - src_leaves_of[u]
        if extra > 0:
            bound += extra
        for cls in (sink_cls[u], dbl_cls[u]):
            if popcount(cls) >= 2:
                mandatory |= cls & (cls - 1)
    return mandatory, bound


@njit(cache=True, nogil=True)
def throttle_pruned(out, inn, n):
    """Exact th with source seeding, leaf-twin seeding and counting bounds.

    Returns (th, B) where B is the first optimal set in colex order.
    """
    full = (np.int64(1) << n) - 1
    if n == 0:
        return 0, np.int64(0)
    best = n
    best_mask = full
    floor = floor_bound(n)
    mandatory, leaf_bound = _forced_and_seeded(out, inn, n)
    mcount = popcount(mandatory)
    free = np.empty(n - mcount, dtype=np.int64)
    m = 0
    for v in range(n):
        if not (mandatory >> v) & 1:
            free[m] = v
            m += 1
    k = max(mcount, leaf_bound, 1)
    c = np.empty(n, dtype=np.int64)
    while k < best:
        # at most k vertices are forced per round
        lb = (n - k + k - 1) // k
        r = k - mcount
        if k + lb >= best or r > m:
            k += 1
            continue
        for i in range(r):
            c[i] = i
        while True:
            mask = mandatory
            for i in range(r):
                mask |= np.int64(1) << free[c[i]]
            pt = greedy_pt(out, n, mask, best - k - 1)
            if pt != NO_PT and k + pt < best:
                best = k + pt
                best_mask = mask
                if best <= floor:
                    return best, best_mask
                if k + lb >= best:
                    break
            j = 0
            while j < r:
                lim = m if j == r - 1 else c[j + 1]
                if c[j] + 1 < lim:
                    break
                j += 1
            if j == r:
                break
            c[j] += 1
            for i in range(j):
                c[i] = i
        k += 1
    return best, best_mask


@njit(cache=True, nogil=True)
def throttle_plain(out, n):
    """Exact th by scanning every subset; the unpruned reference."""
    full = (np.int64(1) << n) - 1
    best = n
    best_mask = full
    for mask in range(full):
        k = popcount(mask)
        if k >= best:
            continue
        pt = greedy_pt(out, n, np.int64(mask), n)
        if pt != NO_PT and k + pt < best:
            best = k + pt
            best_mask = np.int64(mask)
    return best, best_mask


@njit(cache=True, nogil=True)
def min_pt_of_size(out, inn, n, k):
    """(pt_k, B): least pt over zero forcing sets of size exactly k, or (NO_PT, 0)."""
    sources = np.int64(0)
    for v in range(n):
        if inn[v] == 0:
            sources |= np.int64(1) << v
    mcount = popcount(sources)
    r = k - mcount
    m = n - mcount
    if r < 0 or r > m:
        return NO_PT, np.int64(0)
    free = np.empty(m, dtype=np.int64)
    j = 0
    for v in range(n):
        if not (sources >> v) & 1:
            free[j] = v
            j += 1
    best = NO_PT
    best_mask = np.int64(0)
    c = np.empty(max(r, 1), dtype=np.int64)
    for i in range(r):
        c[i] = i
    while True:
        mask = sources
        for i in range(r):
            mask |= np.int64(1) << free[c[i]]
        cap = n if best == NO_PT else best - 1
        pt = greedy_pt(out, n, mask, cap)
        if pt != NO_PT and (best == NO_PT or pt < best):
            best = pt
            best_mask = mask
            if best == 0 or (n - k + k - 1) // max(k, 1) >= best:
                break
        j = 0
        while j < r:
            lim = m if j == r - 1 else c[j + 1]
            if c[j] + 1 < lim:
                break
            j += 1
        if j == r:
            break
        c[j] += 1
        for i in range(j):
            c[i] = i
    return best, best_mask


@njit(cache=True, nogil=True)
def zero_forcing_number(out, inn, n):
    for k in range(n + 1):
        pt, _ = min_pt_of_size(out, inn, n, k)
        if pt != NO_PT:
            return k
    return n


@njit(cache=True, nogil=True)
def census_rows(n, index, out, inn):
    for v in range(n):
        out[v] = 0
        inn[v] = 0
    for i in range(n):
        for j in range(i + 1, n):
            s = index & 3
            index >>= 2
            if s & 1:
                out[i] |= np.int64(1) << j
                inn[j] |= np.int64(1) << i
            if s & 2:
                out[j] |= np.int64(1) << i
                inn[i] |= np.int64(1) << j


@njit(cache=True, nogil=True)
def census_th(n, lo, hi, prune):
    res = np.empty(hi - lo, dtype=np.int64)
    out = np.zeros(max(n, 1), dtype=np.int64)
    inn = np.zeros(max(n, 1), dtype=np.int64)
    for idx in range(lo, hi):
        census_rows(n, idx, out, inn)
        if prune:
            res[idx - lo] = throttle_pruned(out, inn, n)[0]
        else:
            res[idx - lo] = throttle_plain(out, n)[0]
    return res


@njit(cache=True, nogil=True)
def orientation_th(n, eu, ev, lo, hi):
    """th of orientations ``lo..hi-1``; bit j of the index sends edge j from ev[j] to eu[j]."""
    res = np.empty(hi - lo, dtype=np.int64)
    out = np.zeros(max(n, 1), dtype=np.int64)
    inn = np.zeros(max(n, 1), dtype=np.int64)
    for idx in range(lo, hi):
        for v in range(n):
            out[v] = 0
            inn[v] = 0
        for j in range(eu.shape[0]):
            a = eu[j]
            b = ev[j]
            if (idx >> j) & 1:
                a, b = b, a
            out[a] |= np.int64(1) << b
            inn[b] |= np.int64(1) << a
        res[idx - lo] = throttle_pruned(out, inn, n)[0]
    return res
