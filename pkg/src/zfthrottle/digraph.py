"""Bit-packed simple digraphs and undirected graphs.

Vertex sets are plain ``int`` bitmasks: vertex ``v`` is present iff bit ``v``
is set.  Every public function that takes a vertex set also accepts any
iterable of vertex indices.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import CapacityError, ParseError, PreconditionError

MAX_VERTICES = 64
ORIENTATION_CAP = 26
INDEPENDENCE_CAP = 40


def as_mask(vertices) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_n(n):
    if not 0 <= n <= MAX_VERTICES:
        raise CapacityError(f"n={n} outside supported range 0..{MAX_VERTICES}")


@dataclass(frozen=True)
class Digraph:
    """Simple digraph on vertices ``0..n-1``; double arcs are allowed."""

    n: int
    out_adj: tuple[int, ...]
    in_adj: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        _check_n(self.n)
        if len(self.out_adj) != self.n:
            raise PreconditionError("out_adj length must equal n")
        full = (1 << self.n) - 1
        inn = [0] * self.n
        for v, row in enumerate(self.out_adj):
            if row & ~full:
                raise PreconditionError(f"vertex {v} has an out-neighbor outside the vertex range")
            if row >> v & 1:
                raise PreconditionError(f"self-loop at vertex {v}")
            for w in members(row):
                inn[w] |= 1 << v
        object.__setattr__(self, "out_adj", tuple(self.out_adj))
        object.__setattr__(self, "in_adj", tuple(inn))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        rows = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"arc ({u},{v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * n)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.out_adj[u])]

    def num_arcs(self) -> int:
        return sum(popcount(r) for r in self.out_adj)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_adj[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        return popcount(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.in_adj[v])

    def sources(self) -> int:
        return as_mask(v for v in range(self.n) if self.in_adj[v] == 0)

    def sinks(self) -> int:
        return as_mask(v for v in range(self.n) if self.out_adj[v] == 0)

    def is_oriented(self) -> bool:
        return all(not (self.out_adj[v] & self.in_adj[v]) for v in range(self.n))

    def underlying(self) -> "UndirectedGraph":
        return UndirectedGraph(self.n, tuple(self.out_adj[v] | self.in_adj[v] for v in range(self.n)))

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, self.out_adj)

    def to_dict(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in sorted(self.arcs())]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in sorted(self.arcs())]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        if len(self.adj) != self.n:
            raise PreconditionError("adj length must equal n")
        for u in range(self.n):
            if self.adj[u] >> u & 1:
                raise PreconditionError(f"self-loop at vertex {u}")
            for v in members(self.adj[u]):
                if v >= self.n or not self.adj[v] >> u & 1:
                    raise PreconditionError(f"adjacency not symmetric at ({u},{v})")
        object.__setattr__(self, "adj", tuple(self.adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UndirectedGraph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def leaves(self) -> int:
        return as_mask(v for v in range(self.n) if popcount(self.adj[v]) == 1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}


def parse_edge_list(text: str) -> Digraph:
    """Parse the line-based arc format: a vertex count, then one ``u v`` per line.

    Blank lines and ``#`` comments are ignored; duplicate arcs collapse.
    """
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise ParseError(lineno, f"expected vertex count, got {raw!r}")
            n = int(parts[0])
            if n > MAX_VERTICES:
                raise ParseError(lineno, f"vertex count {n} exceeds {MAX_VERTICES}")
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex in {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        arcs.append((u, v))
    if n is None:
        raise ParseError(0, "empty input")
    return Digraph.from_arcs(n, arcs)


def digraph_from_dict(d: dict) -> Digraph:
    return Digraph.from_arcs(int(d["n"]), [tuple(a) for a in d["arcs"]])


def load_digraph(text: str) -> Digraph:
    """Accept either the JSON form or the edge-list form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return digraph_from_dict(json.loads(stripped))
    return parse_edge_list(text)


def to_double_arc(g: UndirectedGraph) -> Digraph:
    return Digraph(g.n, g.adj)


def transpose(d: Digraph) -> Digraph:
    return Digraph(d.n, d.in_adj)


def flip_arc(d: Digraph, u: int, v: int) -> Digraph:
    if not d.has_arc(u, v):
        raise PreconditionError(f"arc ({u},{v}) not present")
    if d.has_arc(v, u):
        raise PreconditionError(f"reverse arc ({v},{u}) present; flip undefined")
    rows = list(d.out_adj)
    rows[u] &= ~(1 << v)
    rows[v] |= 1 << u
    return Digraph(d.n, tuple(rows))


def _relabel_drop(mask: int, v: int) -> int:
    """Remove bit ``v`` and shift the higher bits down by one."""
    low = mask & ((1 << v) - 1)
    return low | ((mask >> (v + 1)) << v)


def contract_arc(d: Digraph, u: int, v: int) -> Digraph:
    """Merge ``u`` and ``v`` into vertex ``min(u, v)``; higher labels shift down."""
    if not (0 <= u < d.n and 0 <= v < d.n) or not d.has_arc(u, v):
        raise PreconditionError(f"arc ({u},{v}) not present")
    keep, gone = min(u, v), max(u, v)
    bk, bg = 1 << keep, 1 << gone
    rows = list(d.out_adj)
    rows[keep] |= rows[gone]
    for x in range(d.n):
        if rows[x] & bg:
            rows[x] = (rows[x] & ~bg) | bk
    rows[keep] &= ~bk
    del rows[gone]
    return Digraph(d.n - 1, tuple(_relabel_drop(r, gone) for r in rows))


def delete_vertex(d: Digraph, v: int) -> Digraph:
    if not 0 <= v < d.n:
        raise PreconditionError(f"vertex {v} out of range")
    rows = [_relabel_drop(r, v) for i, r in enumerate(d.out_adj) if i != v]
    return Digraph(d.n - 1, tuple(rows))


def add_vertex(d: Digraph, in_arcs=(), out_arcs=()) -> Digraph:
    """Append vertex ``n`` with arcs ``u -> n`` for ``u in in_arcs`` and ``n -> w`` for ``w in out_arcs``."""
    new = d.n
    ins, outs = as_mask(in_arcs), as_mask(out_arcs)
    if (ins | outs) >> new:
        raise PreconditionError("arc endpoint out of range")
    rows = [r | (1 << new) if ins >> i & 1 else r for i, r in enumerate(d.out_adj)]
    rows.append(outs)
    return Digraph(new + 1, tuple(rows))


def disjoint_union(d1: Digraph, d2: Digraph) -> Digraph:
    return Digraph(d1.n + d2.n, d1.out_adj + tuple(r << d1.n for r in d2.out_adj))


def induced_subgraph(d: Digraph, keep) -> Digraph:
    keep = members(as_mask(keep))
    pos = {v: i for i, v in enumerate(keep)}
    arcs = [(pos[u], pos[v]) for u, v in d.arcs() if u in pos and v in pos]
    return Digraph.from_arcs(len(keep), arcs)


def orientation(g: UndirectedGraph, index: int, edges=None) -> Digraph:
    """Orientation number ``index``: bit ``j`` set directs canonical edge ``j`` from larger to smaller end."""
    if edges is None:
        edges = g.edges()
    rows = [0] * g.n
    for j, (u, v) in enumerate(edges):
        if index >> j & 1:
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
    return Digraph(g.n, tuple(rows))


def orientations_of(g: UndirectedGraph, start: int = 0, stop: int | None = None) -> Iterator[Digraph]:
    edges = g.edges()
    if len(edges) > ORIENTATION_CAP:
        raise CapacityError(f"{len(edges)} edges exceeds orientation cap {ORIENTATION_CAP}")
    total = 1 << len(edges)
    stop = total if stop is None else min(stop, total)
    for i in range(start, stop):
        yield orientation(g, i, edges)


def shard_range(total: int, shard: int, shards: int) -> tuple[int, int]:
    """Half-open index range of ``shard`` (0-based) out of ``shards`` equal parts."""
    if not 0 <= shard < shards:
        raise PreconditionError(f"shard {shard} not in 0..{shards - 1}")
    return total * shard // shards, total * (shard + 1) // shards


def independence_number(g: UndirectedGraph) -> int:
    if g.n > INDEPENDENCE_CAP:
        raise CapacityError(f"n={g.n} exceeds independence cap {INDEPENDENCE_CAP}")
    adj = g.adj

    def best(cand: int) -> int:
        if not cand:
            return 0
        # vertices of degree <= 1 inside cand can always be taken
        for v in members(cand):
            if popcount(adj[v] & cand) <= 1:
                return 1 + best(cand & ~(adj[v] | 1 << v))
        v = max(members(cand), key=lambda x: popcount(adj[x] & cand))
        take = 1 + best(cand & ~(adj[v] | 1 << v))
        skip = best(cand & ~(1 << v))
        return max(take, skip)

    return best((1 << g.n) - 1)


def census_digraph(n: int, index: int) -> Digraph:
    """Digraph number ``index`` among all ``4**C(n,2)`` simple digraphs on ``n`` vertices.

    Base-4 digit ``p`` of ``index`` gives the state of the ``p``-th vertex pair
    ``(i, j)``, ``i < j``: 0 none, 1 ``i->j``, 2 ``j->i``, 3 both.
    """
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            s = index & 3
            index >>= 2
            if s & 1:
                rows[i] |= 1 << j
            if s & 2:
                rows[j] |= 1 << i
    return Digraph(n, tuple(rows))


def census_size(n: int) -> int:
    return 4 ** (n * (n - 1) // 2)


def all_digraphs(n: int) -> Iterator[Digraph]:
    for i in range(census_size(n)):
        yield census_digraph(n, i)


def connected_graphs(n: int) -> Iterator[UndirectedGraph]:
    """All connected labeled graphs on ``n`` vertices, by edge-subset filtering."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for s in range(1 << len(pairs)):
        g = UndirectedGraph.from_edges(n, [pairs[j] for j in range(len(pairs)) if s >> j & 1])
        if g.is_connected():
            yield g
