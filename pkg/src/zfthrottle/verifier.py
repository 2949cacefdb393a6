"""Executable checks of the throttling results over censuses, families and samples.

Each suite walks every instance in a scope and records the instances where
the expected relation fails.  A scope is one of

* ``census:N``            every digraph (or connected graph) on exactly N vertices
* ``family:LO..HI``       a family parameter range, e.g. ``family:3..7``
* ``random:NMAX,COUNT,SEED`` seeded random digraphs with 1..NMAX vertices
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import _kernels
from .characterization import apply_witness, are_isomorphic, random_witness, witness_for_throttling
from .closed_form import alt_even, alt_even_lb, alt_even_ub, alt_path, floor_2sqrt
from .digraph import (
    Digraph, UndirectedGraph, add_vertex, all_digraphs, as_mask, census_size, connected_graphs,
    delete_vertex, disjoint_union, orientation, flip_arc, independence_number, members, popcount, shard_range,
    to_double_arc, transpose,
)
from .errors import CapacityError, PreconditionError
from .families import (
    alternating_path, augmented_double_star, complete_graph, double_star, is_tournament, leaf_counts,
    path_graph, star, tournament_max, tournament_min,
)
from .forcing import (
    NOT_FORCING, ForceSet, _rows, all_force_sets, brute_force_pt, propagate_greedy,
    psd_throttle_pinned, reverse, terminus, timeline_of_forces,
)
from .throttling import oti, orientation_th_values, throttling_number

CONJECTURE_CAP = 22


@dataclass(frozen=True)
class Scope:
    kind: str
    n: int | None = None
    lo: int | None = None
    hi: int | None = None
    count: int | None = None
    seed: int | None = None

    @classmethod
    def parse(cls, text: str) -> "Scope":
        kind, _, rest = text.partition(":")
        try:
            if kind == "census":
                return cls("census", n=int(rest))
            if kind == "family":
                lo, _, hi = rest.partition("..")
                return cls("family", lo=int(lo), hi=int(hi or lo))
            if kind == "random":
                nmax, count, seed = (int(x) for x in rest.split(","))
                return cls("random", n=nmax, count=count, seed=seed)
        except ValueError:
            pass
        raise PreconditionError(f"bad scope {text!r}; expected census:N, family:LO..HI or random:NMAX,COUNT,SEED")

    def __str__(self):
        if self.kind == "census":
            return f"census:{self.n}"
        if self.kind == "family":
            return f"family:{self.lo}..{self.hi}"
        return f"random:{self.n},{self.count},{self.seed}"


@dataclass
class SuiteReport:
    suite: str
    scope: str
    seed: int | None
    instances: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, relation, **observed):
        self.failures.append({"instance": instance, "relation": relation, "observed": observed})

    def to_dict(self, timing: bool = True) -> dict:
        failures = sorted(self.failures, key=lambda f: json.dumps(f, sort_keys=True))
        d = {
            "suite": self.suite,
            "scope": self.scope,
            "seed": self.seed,
            "instances": self.instances,
            "failures": failures,
            "notes": self.notes,
            "ms": self.ms if timing else 0,
        }
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


@lru_cache(maxsize=200_000)
def th_value(d: Digraph) -> int:
    return throttling_number(d).th


def enc(d: Digraph) -> str:
    return json.dumps(d.to_dict(), separators=(",", ":"))


def enc_graph(g: UndirectedGraph) -> str:
    return json.dumps(g.to_dict(), separators=(",", ":"))


def random_digraph(rng: random.Random, n: int, oriented: bool = False) -> Digraph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            s = rng.randrange(3 if oriented else 4)
            if s & 1:
                rows[i] |= 1 << j
            if s & 2:
                rows[j] |= 1 << i
    return Digraph(n, tuple(rows))


def digraphs_in(scope: Scope, oriented: bool = False, min_n: int = 1):
    if scope.kind == "census":
        for d in all_digraphs(scope.n):
            if not oriented or d.is_oriented():
                yield d
    elif scope.kind == "random":
        rng = random.Random(scope.seed)
        for _ in range(scope.count):
            yield random_digraph(rng, rng.randint(min_n, scope.n), oriented)
    else:
        raise PreconditionError(f"scope {scope} does not describe digraphs")


def graphs_in(scope: Scope):
    if scope.kind == "census":
        yield from connected_graphs(scope.n)
    elif scope.kind == "random":
        rng = random.Random(scope.seed)
        made = 0
        while made < scope.count:
            n = rng.randint(1, scope.n)
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            g = UndirectedGraph.from_edges(n, [p for p in pairs if rng.random() < 0.5])
            if g.is_connected() and g.num_edges() <= 16:
                made += 1
                yield g
    else:
        raise PreconditionError(f"scope {scope} does not describe undirected graphs")


def pt_k_profile(d: Digraph) -> list:
    """pt_k for k = 0..n; NOT_FORCING where no zero forcing set of that size exists."""
    if d.n == 0:
        return [0]
    out, inn = _rows(d)
    res = []
    for k in range(d.n + 1):
        pt, _ = _kernels.min_pt_of_size(out, inn, d.n, k)
        res.append(NOT_FORCING if pt == _kernels.NO_PT else int(pt))
    return res


def _eligible_flips(d: Digraph):
    return [(u, v) for u, v in d.arcs() if not d.has_arc(v, u)]


# ---- digraph suites -------------------------------------------------------


def suite_transpose(scope, rep):
    for d in digraphs_in(scope):
        rep.instances += 1
        a, b = th_value(d), th_value(transpose(d))
        if a != b:
            rep.fail(enc(d), "th(G) == th(G^T)", th=a, th_T=b)


def suite_arcflip(scope, rep, one_sided=False):
    for d in digraphs_in(scope):
        rep.instances += 1
        base = th_value(d)
        for u, v in _eligible_flips(d):
            new = th_value(flip_arc(d, u, v))
            ok = new <= base + 1 if one_sided else abs(new - base) <= 1
            if not ok:
                rel = "th(flip) <= th + 1" if one_sided else "|th(flip) - th| <= 1"
                rep.fail(enc(d), rel, arc=[u, v], th=base, th_flip=new)


def suite_flip_increase(scope, rep):
    suite_arcflip(scope, rep, one_sided=True)


def suite_sourcesink(scope, rep):
    for d in digraphs_in(scope, oriented=True):
        rep.instances += 1
        src, snk = d.sources(), d.sinks()
        for u, v in d.arcs():
            if src >> u & 1 and snk >> v & 1:
                a, b = th_value(d), th_value(flip_arc(d, u, v))
                if b > a:
                    rep.fail(enc(d), "source->sink flip does not increase th", arc=[u, v], th=a, th_flip=b)


def suite_vertexpm(scope, rep):
    rng = random.Random(scope.seed if scope.seed is not None else 0)
    for d in digraphs_in(scope):
        rep.instances += 1
        base = th_value(d)
        for v in range(d.n):
            new = th_value(delete_vertex(d, v))
            if abs(new - base) > 1:
                rep.fail(enc(d), "|th(G - v) - th(G)| <= 1", vertex=v, th=base, th_new=new)
        full = (1 << d.n) - 1
        patterns = [(0, 0), (full, full), (rng.getrandbits(d.n), rng.getrandbits(d.n))]
        for ins, outs in patterns:
            new = th_value(add_vertex(d, ins, outs))
            if abs(new - base) > 1:
                rep.fail(enc(d), "|th(G + v) - th(G)| <= 1", ins=members(ins), outs=members(outs), th=base, th_new=new)
        iso = th_value(add_vertex(d))
        if iso != base + 1:
            rep.fail(enc(d), "isolated vertex adds exactly 1", th=base, th_new=iso)


def suite_uniontranspose(scope, rep):
    rng = random.Random(scope.seed if scope.seed is not None else 0)
    for d in digraphs_in(scope):
        rep.instances += 1
        other = random_digraph(rng, rng.randint(1, 4))
        a = th_value(disjoint_union(d, other))
        b = th_value(disjoint_union(transpose(d), other))
        if a != b:
            rep.fail(enc(d), "th(G1 u G2) == th(G1^T u G2)", partner=enc(other), th=a, th_T=b)


def suite_ptk_transpose(scope, rep):
    for d in digraphs_in(scope):
        rep.instances += 1
        p, q = pt_k_profile(d), pt_k_profile(transpose(d))
        if [x is NOT_FORCING for x in p] != [x is NOT_FORCING for x in q] or any(
            x is not NOT_FORCING and x != y for x, y in zip(p, q)
        ):
            rep.fail(enc(d), "pt_k(G) == pt_k(G^T) for Z <= k <= n", pt_k=repr(p), pt_k_T=repr(q))


def suite_terminus(scope, rep):
    for d in digraphs_in(scope):
        rep.instances += 1
        prof = pt_k_profile(d)
        dt = transpose(d)
        for B in range(1 << d.n):
            tl = propagate_greedy(d, B)
            if tl.pt is NOT_FORCING:
                continue
            F = tl.forces
            term = terminus(F, d.n)
            if popcount(term) != popcount(B):
                rep.fail(enc(d), "|Term(F)| == |B|", B=members(B), term=members(term))
            rev = timeline_of_forces(dt, term, reverse(F))
            if rev.pt != tl.pt:
                rep.fail(enc(d), "pt(G;F) == pt(G^T;Rev F)", B=members(B), pt=tl.pt, pt_rev=repr(rev.pt))
            if tl.pt == prof[popcount(B)]:
                back = propagate_greedy(dt, term).pt
                if back != tl.pt:
                    rep.fail(enc(d), "pt(G;B) == pt(G^T;Term F) when pt(G;B) = pt_k", B=members(B), pt=tl.pt, pt_T=repr(back))


def suite_greedy_oracle(scope, rep):
    rng = random.Random(scope.seed if scope.seed is not None else 0)
    for d in digraphs_in(scope):
        rep.instances += 1
        sets = range(1 << d.n) if d.n <= 4 else [rng.getrandbits(d.n) | d.sources() for _ in range(4)]
        for B in sets:
            g, b = propagate_greedy(d, B).pt, brute_force_pt(d, B)
            if (g is NOT_FORCING) != (b is NOT_FORCING) or (g is not NOT_FORCING and g != b):
                rep.fail(enc(d), "greedy pt == min over force sets", B=members(B), greedy=repr(g), brute=repr(b))


def suite_reversal(scope, rep):
    for d in digraphs_in(scope):
        rep.instances += 1
        dt = transpose(d)
        for B in range(1 << d.n):
            for F in all_force_sets(d, B):
                F = ForceSet(sorted(F))
                tl = timeline_of_forces(d, B, F)
                if tl.pt is NOT_FORCING:
                    continue
                rev = timeline_of_forces(dt, terminus(F, d.n), reverse(F))
                if rev.pt != tl.pt:
                    rep.fail(enc(d), "pt(G;F) == pt(G^T;Rev F)", B=members(B), forces=[list(f) for f in F], pt=tl.pt, pt_rev=repr(rev.pt))


def _leaf_requirements(d: Digraph):
    g = d.underlying()
    leaves = g.leaves()
    groups = {}
    for v in members(leaves):
        groups.setdefault(members(g.adj[v])[0], []).append(v)
    x, y = leaf_counts(g)
    return groups, y - x


def suite_leaves(scope, rep):
    for d in digraphs_in(scope, oriented=True):
        rep.instances += 1
        groups, bound = _leaf_requirements(d)
        for B in range(1 << d.n):
            if propagate_greedy(d, B).pt is NOT_FORCING:
                continue
            if popcount(B) < bound:
                rep.fail(enc(d), "|B| >= y - x", B=members(B), bound=bound)
            for u, ls in groups.items():
                if sum(B >> v & 1 for v in ls) < len(ls) - 1:
                    rep.fail(enc(d), "B holds k-1 of the k leaves at u", B=members(B), u=u, leaves=ls)


def suite_finite(scope, rep):
    for d in digraphs_in(scope):
        rep.instances += 1
        t = th_value(d)
        if 4 * d.n > (t + 1) ** 2:
            rep.fail(enc(d), "n <= ((th + 1) / 2)^2", th=t)


def suite_charthm(scope, rep):
    if scope.kind == "census":
        for d in digraphs_in(scope):
            rep.instances += 1
            t = th_value(d)
            w = witness_for_throttling(d, t)
            if w is None:
                rep.fail(enc(d), "witness exists at t = th", th=t)
                continue
            if w.a + w.b != t:
                rep.fail(enc(d), "a + b == t", a=w.a, b=w.b)
            if not are_isomorphic(apply_witness(w), d):
                rep.fail(enc(d), "replay is isomorphic to G", witness=w.to_dict())
            if t > 1 and witness_for_throttling(d, t - 1) is not None:
                rep.fail(enc(d), "no witness below th", th=t)
            if t < d.n + 1:
                wide = witness_for_throttling(d, t + 1)
                if wide is None or not are_isomorphic(apply_witness(wide), d):
                    rep.fail(enc(d), "padded witness at t = th + 1 replays to G", th=t)
    elif scope.kind == "random":
        rng = random.Random(scope.seed)
        for a in range(1, scope.n + 1):
            for b in range(0, scope.n - a + 1):
                for _ in range(scope.count):
                    rep.instances += 1
                    w = random_witness(a, b, rng)
                    t = th_value(apply_witness(w))
                    if t > a + b:
                        rep.fail(json.dumps(w.to_dict()), "th(replay) <= a + b", th=t)
    else:
        raise PreconditionError("charthm takes census or random scope")


# ---- orientation suites ---------------------------------------------------


def _oti_checks(g: UndirectedGraph, rep, which):
    report = oti(g, enc_graph(g))
    n, e = g.n, g.num_edges()
    inst = enc_graph(g)
    if "full" in which:
        if not report.full:
            rep.fail(inst, "OTI is full", attained=report.attained)
        if report.M - report.m > e // 2:
            rep.fail(inst, "M - m <= floor(|E|/2)", m=report.m, M=report.M, edges=e)
    if "bounds" in which and not (floor_2sqrt(n) <= report.m and report.M <= n):
        rep.fail(inst, "OTI within [ceil(2 sqrt n - 1), n]", m=report.m, M=report.M)
    if "subset" in which:
        th_g = th_value(to_double_arc(g))
        alpha = independence_number(g)
        if report.m > th_g:
            rep.fail(inst, "m <= th(G)", m=report.m, th=th_g)
        if e and alpha + 1 > report.M:
            rep.fail(inst, "alpha(G) + 1 <= M", alpha=alpha, M=report.M)
        if e and th_g <= alpha + 1 and not (report.m <= th_g and alpha + 1 <= report.M):
            rep.fail(inst, "[th(G), alpha + 1] within OTI", th=th_g, alpha=alpha, m=report.m, M=report.M)
        if e and th_g > alpha + 1 and not report.m <= th_g <= report.M:
            rep.notes.append({"instance": inst, "note": "th(G) outside OTI with th(G) > alpha + 1", "th": th_g})
    return report


def suite_oti_full(scope, rep):
    for g in graphs_in(scope):
        rep.instances += 1
        _oti_checks(g, rep, {"full"})


def suite_oti_bounds(scope, rep):
    for g in graphs_in(scope):
        rep.instances += 1
        _oti_checks(g, rep, {"bounds"})


def suite_oti_subset(scope, rep):
    for g in graphs_in(scope):
        rep.instances += 1
        _oti_checks(g, rep, {"subset"})


def _family_range(scope):
    if scope.kind != "family":
        if scope.kind == "census":
            return range(scope.n, scope.n + 1)
        raise PreconditionError("suite takes a family or census scope")
    return range(scope.lo, scope.hi + 1)


def suite_star(scope, rep):
    for n in _family_range(scope):
        g = star(n)
        for i, t in enumerate(orientation_th_values(g)):
            rep.instances += 1
            if t != n:
                rep.fail(f"star:{n}", "th(oriented star) == n", orientation=i, th=t)


def balanced_augstar(n: int) -> UndirectedGraph:
    leaves = n - 3
    return augmented_double_star((leaves + 1) // 2, leaves // 2)


def suite_augstar(scope, rep):
    for n in _family_range(scope):
        if n < 12:
            raise PreconditionError("augmented double star bounds need n >= 12")
        g = balanced_augstar(n)
        s, t_ = (n - 2) // 2, (n - 3) // 2
        lo = floor_2sqrt(n)
        for i, t in enumerate(orientation_th_values(g)):
            rep.instances += 1
            if not lo < t < n:
                rep.fail(f"augstar:{s},{t_}#{i}", "ceil(2 sqrt n - 1) < th < n", orientation=i, th=t)


def _check_leaf_bound_family(g: UndirectedGraph, name, rep):
    x, y = leaf_counts(g)
    for i, t in enumerate(orientation_th_values(g)):
        d = orientation(g, i)
        rep.instances += 1
        cert = throttling_number(d)
        if popcount(cert.B) < y - x:
            rep.fail(name, "|B| >= y - x", orientation=i, B=members(cert.B))


def suite_compmax(scope, rep):
    for n in _family_range(scope):
        rep.instances += 1
        hi, lo = th_value(tournament_max(n)), th_value(tournament_min(n))
        if hi != n or not is_tournament(tournament_max(n)):
            rep.fail(f"tmax:{n}", "th(tournament_max) == n", th=hi)
        if lo != floor_2sqrt(n) or not is_tournament(tournament_min(n)):
            rep.fail(f"tmin:{n}", "th(tournament_min) == ceil(2 sqrt n - 1)", th=lo)
        if n <= 6:
            r = oti(complete_graph(n))
            if (r.m, r.M) != (floor_2sqrt(n), n):
                rep.fail(f"complete:{n}", "OTI(K_n) is maximum", m=r.m, M=r.M)


def suite_altpath(scope, rep):
    for n in _family_range(scope):
        rep.instances += 1
        expected = alt_path(n)
        for flip in (0, 1):
            t = th_value(alternating_path(n, flip))
            if t != expected:
                rep.fail(f"altpath:{n},{flip}", "th(alternating path) == closed form", th=t, expected=expected)
        if n % 2 == 0:
            lb, ub = alt_even_lb(n), alt_even_ub(n)
            if not lb == expected == ub:
                rep.fail(f"altpath:{n}", "lower bound == exact == upper bound", lb=lb, exact=expected, ub=ub)


def suite_psd_reduction(scope, rep):
    for n in _family_range(scope):
        if n % 2:
            continue
        rep.instances += 1
        direct = th_value(alternating_path(n))
        via = n // 2 - 1 + psd_throttle_pinned(1 + n // 2)[2]
        if direct != via:
            rep.fail(f"altpath:{n}", "th == n/2 - 1 + pinned PSD th of the auxiliary path", th=direct, via_psd=via)


def suite_pathinterior(scope, rep):
    for n in _family_range(scope):
        g = path_graph(n)
        edges = g.edges()
        values = orientation_th_values(g)
        for idx, t in enumerate(values):
            rep.instances += 1
            d = orientation(g, idx, edges)
            for j, (u, v) in enumerate(edges):
                a, b = (v, u) if idx >> j & 1 else (u, v)
                if all(d.in_degree(x) == 1 and d.out_degree(x) == 1 for x in (a, b)):
                    t2 = values[idx ^ (1 << j)]
                    if t2 < t:
                        rep.fail(f"path:{n}#{idx}", "th(P') >= th(P) after interior flip", arc=[a, b], th=t, th_flip=t2)


def suite_leafbound(scope, rep):
    for n in _family_range(scope):
        _check_leaf_bound_family(star(n), f"star:{n}", rep)
        if n >= 4:
            s, t = (n - 2 + 1) // 2, (n - 2) // 2
            _check_leaf_bound_family(double_star(s, t), f"doublestar:{s},{t}", rep)
        if n >= 5:
            _check_leaf_bound_family(balanced_augstar(n), f"augstar:{n}", rep)


def suite_induced_nonmonotone(scope, rep):
    """Look for an oriented G and a vertex-deleted H with th(H) > th(G)."""
    if scope.kind != "random":
        raise PreconditionError("induced_nonmonotone takes a random scope")
    rng = random.Random(scope.seed)
    found = None
    for _ in range(scope.count):
        d = random_digraph(rng, rng.randint(min(4, scope.n), scope.n), oriented=True)
        rep.instances += 1
        base = th_value(d)
        for v in range(d.n):
            h = delete_vertex(d, v)
            if th_value(h) > base:
                found = {"G": enc(d), "deleted": v, "th_G": base, "th_H": th_value(h)}
                break
        if found:
            break
    if found:
        rep.notes.append(found)
    else:
        rep.fail(str(scope), "some induced subgraph has larger th")


SUITES = {
    "transpose": (suite_transpose, "census:4"),
    "arcflip": (suite_arcflip, "census:4"),
    "flip_increase": (suite_flip_increase, "census:4"),
    "sourcesink": (suite_sourcesink, "census:4"),
    "vertexpm": (suite_vertexpm, "census:4"),
    "uniontranspose": (suite_uniontranspose, "census:4"),
    "ptk_transpose": (suite_ptk_transpose, "census:4"),
    "terminus": (suite_terminus, "census:4"),
    "greedy_oracle": (suite_greedy_oracle, "census:4"),
    "reversal": (suite_reversal, "census:4"),
    "leaves": (suite_leaves, "census:4"),
    "leafbound": (suite_leafbound, "family:3..7"),
    "finite": (suite_finite, "census:4"),
    "charthm": (suite_charthm, "census:4"),
    "oti_full": (suite_oti_full, "census:5"),
    "oti_bounds": (suite_oti_bounds, "census:5"),
    "oti_subset": (suite_oti_subset, "census:5"),
    "star": (suite_star, "family:3..7"),
    "augstar": (suite_augstar, "family:12..12"),
    "compmax": (suite_compmax, "family:4..12"),
    "altpath": (suite_altpath, "family:2..14"),
    "psd_reduction": (suite_psd_reduction, "family:2..14"),
    "pathinterior": (suite_pathinterior, "family:2..12"),
    "induced_nonmonotone": (suite_induced_nonmonotone, "random:7,20000,1"),
}


def run_suite(name: str, scope: Scope | str | None = None) -> SuiteReport:
    try:
        fn, default = SUITES[name]
    except KeyError:
        raise PreconditionError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}") from None
    if scope is None:
        scope = default
    if isinstance(scope, str):
        scope = Scope.parse(scope)
    rep = SuiteReport(name, str(scope), scope.seed)
    start = time.perf_counter()
    fn(scope, rep)
    rep.ms = int((time.perf_counter() - start) * 1000)
    return rep


# ---- alternating-path conjecture ------------------------------------------


def path_orientation_stats(n: int, shard: tuple[int, int] | None = None, threads: int = 1) -> dict:
    """Max th over orientations of P_n (optionally one shard of the indices) and how many attain it."""
    total = 1 << max(n - 1, 0)
    lo, hi = (0, total) if shard is None else shard_range(total, *shard)
    values = orientation_th_values(path_graph(n), lo, hi, threads) if hi > lo else []
    top = max(values) if values else None
    return {"n": n, "lo": lo, "hi": hi, "total": total, "max": top,
            "count": values.count(top) if values else 0}


def merge_path_stats(parts) -> dict:
    parts = list(parts)
    top = max(p["max"] for p in parts if p["max"] is not None)
    return {
        "n": parts[0]["n"],
        "lo": min(p["lo"] for p in parts),
        "hi": max(p["hi"] for p in parts),
        "total": parts[0]["total"],
        "max": top,
        "count": sum(p["count"] for p in parts if p["max"] == top),
    }


def check_conjecture_stats(stats, rep: SuiteReport):
    for s in stats:
        rep.instances += s["hi"] - s["lo"]
        expected = alt_path(s["n"])
        rep.notes.append(dict(s, expected=expected))
        if s["lo"] == 0 and s["hi"] == s["total"] and s["max"] != expected:
            rep.fail(f"path:{s['n']}", "max th over orientations == alternating-path value", max=s["max"], expected=expected)


def verify_alternating_conjecture(n_max: int, shard: tuple[int, int] | None = None, threads: int = 1) -> SuiteReport:
    if n_max > CONJECTURE_CAP:
        raise CapacityError(f"n_max={n_max} exceeds budget {CONJECTURE_CAP}")
    rep = SuiteReport("conjecture", f"nmax:{n_max}", None)
    start = time.perf_counter()
    stats = [path_orientation_stats(n, shard, threads) for n in range(1, n_max + 1)]
    check_conjecture_stats(stats, rep)
    rep.ms = int((time.perf_counter() - start) * 1000)
    return rep


def census_distribution(n: int, shard: tuple[int, int] | None = None) -> dict:
    """Histogram of th over all digraphs on n vertices."""
    if n > 6:
        raise CapacityError("census limited to n <= 6")
    total = census_size(n)
    lo, hi = (0, total) if shard is None else shard_range(total, *shard)
    if n == 0:
        values = [0] * (hi - lo)
    else:
        values = [int(x) for x in _kernels.census_th(n, lo, hi, True)]
    hist = {}
    for v in values:
        hist[v] = hist.get(v, 0) + 1
    return {"n": n, "stat": "th", "lo": lo, "hi": hi, "total": total,
            "distribution": {str(k): hist[k] for k in sorted(hist)}}


def merge_census(parts) -> dict:
    parts = list(parts)
    hist = {}
    for p in parts:
        for k, v in p["distribution"].items():
            hist[k] = hist.get(k, 0) + v
    return {"n": parts[0]["n"], "stat": "th", "lo": min(p["lo"] for p in parts),
            "hi": max(p["hi"] for p in parts), "total": parts[0]["total"],
            "distribution": {k: hist[k] for k in sorted(hist, key=int)}}
