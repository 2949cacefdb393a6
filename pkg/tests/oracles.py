"""Slow reference implementations used only by the tests.

These work on plain Python sets and share no code with the package, so an
agreement between the two is evidence rather than tautology.
"""
import itertools
import math

import mpmath


def out_sets(d):
    return [set(v for v in range(d.n) if d.out_adj[u] >> v & 1) for u in range(d.n)]


def naive_pt(d, B):
    """Rounds of simultaneous color changes; None if some vertex stays white."""
    outs = out_sets(d)
    blue = set(B)
    t = 0
    while len(blue) < d.n:
        new = set()
        for u in blue:
            white = outs[u] - blue
            if len(white) == 1:
                new |= white
        if not new:
            return None
        blue |= new
        t += 1
    return t


def naive_th(d):
    best = d.n
    for k in range(d.n + 1):
        if k >= best:
            break
        for B in itertools.combinations(range(d.n), k):
            pt = naive_pt(d, B)
            if pt is not None and k + pt < best:
                best = k + pt
    return best


def naive_z(d):
    for k in range(d.n + 1):
        for B in itertools.combinations(range(d.n), k):
            if naive_pt(d, B) is not None:
                return k


def naive_ptk(d, k):
    vals = [naive_pt(d, B) for B in itertools.combinations(range(d.n), k)]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def naive_alpha(g):
    best = 0
    for r in range(g.n + 1):
        for S in itertools.combinations(range(g.n), r):
            if all(not g.adj[u] >> v & 1 for u, v in itertools.combinations(S, 2)):
                best = r
    return best


mpmath.mp.dps = 60


def mp_ceil(x):
    return int(mpmath.ceil(x))


def oracle_alt_odd(n):
    return (n - 1) // 2 + mp_ceil(mpmath.sqrt(n + 1) - mpmath.mpf(1) / 2)


def oracle_alt_even(n):
    return n // 2 + mp_ceil(mpmath.sqrt(n + 1) - 1)


def oracle_alt_even_ub(n):
    p = (mpmath.sqrt(n + 1) - 1) / 2
    cp = mp_ceil(p)
    return n // 2 + mp_ceil(mpmath.mpf(n // 2 - cp) / (2 * cp + 1)) + cp


def oracle_alt_even_lb(n):
    p = (mpmath.sqrt(n + 1) - 1) / 2
    return n // 2 + mp_ceil(2 * p)


def oracle_floor(n):
    return mp_ceil(2 * mpmath.sqrt(n) - 1)


def float_floor(n):
    return math.ceil(2 * math.sqrt(n) - 1)
