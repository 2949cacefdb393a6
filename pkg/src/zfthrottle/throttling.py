"""Exact throttling numbers and orientation throttling intervals."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .digraph import (
    ORIENTATION_CAP, Digraph, UndirectedGraph, as_mask, popcount, shard_range,
)
from .errors import CapacityError, PreconditionError
from .forcing import NOT_FORCING, ForceSet, _rows, propagate_greedy, timeline_of_forces

THROTTLE_CAP = 40


def default_threads() -> int:
    env = os.environ.get("ZFTHROTTLE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def floor_bound(n: int) -> int:
    """ceil(2*sqrt(n) - 1), the least possible throttling number on n vertices."""
    return int(_kernels.floor_bound(n))


@dataclass(frozen=True)
class ThrottlingCertificate:
    B: int
    forces: ForceSet
    pt: int
    th: int

    def verify(self, d: Digraph) -> bool:
        tl = timeline_of_forces(d, self.B, self.forces)
        return tl.pt is not NOT_FORCING and tl.pt == self.pt and popcount(self.B) + self.pt == self.th

    def to_dict(self) -> dict:
        from .digraph import members

        return {
            "th": self.th,
            "pt": self.pt,
            "B": members(self.B),
            "forces": [[f.u, f.w] for f in sorted(self.forces)],
        }


def th_of_set(d: Digraph, B):
    B = as_mask(B)
    pt = propagate_greedy(d, B).pt
    if pt is NOT_FORCING:
        return NOT_FORCING
    return popcount(B) + pt


def certificate_for(d: Digraph, B) -> ThrottlingCertificate:
    B = as_mask(B)
    tl = propagate_greedy(d, B)
    return ThrottlingCertificate(B, tl.forces, tl.pt, popcount(B) + tl.pt)


def throttling_number(d: Digraph, prune: bool = True) -> ThrottlingCertificate:
    if d.n > THROTTLE_CAP:
        raise CapacityError(f"n={d.n} exceeds throttling cap {THROTTLE_CAP}")
    if d.n == 0:
        return ThrottlingCertificate(0, ForceSet(), 0, 0)
    out, inn = _rows(d)
    if prune:
        th, mask = _kernels.throttle_pruned(out, inn, d.n)
    else:
        if d.n > 24:
            raise CapacityError("unpruned search limited to n <= 24")
        th, mask = _kernels.throttle_plain(out, d.n)
    cert = certificate_for(d, int(mask))
    assert cert.th == th, (cert.th, th)
    return cert


def th(d: Digraph) -> int:
    return throttling_number(d).th


@dataclass
class OTIReport:
    graph: str
    values: list[int]
    offset: int = 0
    total: int | None = None
    m: int = field(init=False)
    M: int = field(init=False)

    def __post_init__(self):
        if not self.values:
            raise PreconditionError("empty OTI report")
        if self.total is None:
            self.total = self.offset + len(self.values)
        self.m = min(self.values)
        self.M = max(self.values)

    @property
    def attained(self) -> list[int]:
        return sorted(set(self.values))

    @property
    def full(self) -> bool:
        return len(self.attained) == self.M - self.m + 1

    @property
    def argmin(self) -> int:
        return self.offset + self.values.index(self.m)

    @property
    def argmax(self) -> int:
        return self.offset + self.values.index(self.M)

    @property
    def complete(self) -> bool:
        return self.offset == 0 and len(self.values) == self.total

    def to_dict(self) -> dict:
        d = {
            "graph": self.graph,
            "m": self.m,
            "M": self.M,
            "attained": self.attained,
            "full": self.full,
            "values": self.values,
            "argmin": self.argmin,
            "argmax": self.argmax,
        }
        if not self.complete:
            d["offset"] = self.offset
            d["total"] = self.total
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "OTIReport":
        return cls(d["graph"], list(d["values"]), d.get("offset", 0), d.get("total"))


def merge_oti(reports) -> OTIReport:
    """Join shard reports; order of the inputs does not matter."""
    reports = sorted(reports, key=lambda r: r.offset)
    graphs = {r.graph for r in reports}
    if len(graphs) != 1:
        raise PreconditionError(f"cannot merge reports for different graphs: {sorted(graphs)}")
    values = []
    for r in reports:
        if r.offset != len(values) + reports[0].offset:
            raise PreconditionError("shard ranges are not contiguous")
        values.extend(r.values)
    return OTIReport(reports[0].graph, values, reports[0].offset, reports[0].total)


def _edge_arrays(g: UndirectedGraph):
    edges = g.edges()
    if len(edges) > ORIENTATION_CAP:
        raise CapacityError(f"{len(edges)} edges exceeds orientation cap {ORIENTATION_CAP}")
    if g.n > THROTTLE_CAP:
        raise CapacityError(f"n={g.n} exceeds throttling cap {THROTTLE_CAP}")
    eu = np.array([u for u, _ in edges] or [0], dtype=np.int64)[: len(edges)]
    ev = np.array([v for _, v in edges] or [0], dtype=np.int64)[: len(edges)]
    return eu, ev, len(edges)


def orientation_th_values(g: UndirectedGraph, lo: int = 0, hi: int | None = None, threads: int = 1) -> list[int]:
    eu, ev, ne = _edge_arrays(g)
    total = 1 << ne
    hi = total if hi is None else min(hi, total)
    if g.n == 0:
        return [0] * (hi - lo)
    if threads <= 1 or hi - lo < 64:
        return [int(x) for x in _kernels.orientation_th(g.n, eu, ev, lo, hi)]
    bounds = [lo + (hi - lo) * i // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(threads) as pool:
        parts = pool.map(lambda ab: _kernels.orientation_th(g.n, eu, ev, ab[0], ab[1]), zip(bounds, bounds[1:]))
        return [int(x) for part in parts for x in part]


def oti(g: UndirectedGraph, name: str = "", shard: tuple[int, int] | None = None,
        pair_transposes: bool = False, threads: int = 1) -> OTIReport:
    """Throttling number of every orientation, indexed as in ``orientations_of``.

    ``pair_transposes`` computes only one of each complementary index pair,
    since complementing every edge direction transposes the digraph.
    """
    _, _, ne = _edge_arrays(g)
    total = 1 << ne
    lo, hi = (0, total) if shard is None else shard_range(total, *shard)
    name = name or f"graph:{g.n}:{g.edges()}"
    if not pair_transposes:
        return OTIReport(name, orientation_th_values(g, lo, hi, threads), lo, total)
    half = total // 2 if ne else 1
    first = orientation_th_values(g, 0, half, threads)
    full = first + [first[(total - 1) ^ i] for i in range(half, total)]
    return OTIReport(name, full[lo:hi], lo, total)
