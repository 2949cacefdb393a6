"""Named graph families and the ``name:p1,p2`` family-spec grammar."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .digraph import Digraph, UndirectedGraph, members, to_double_arc
from .errors import PreconditionError

ALIASES = {
    "host": "host",
    "hessenberg": "hessenberg",
    "altpath": "alternating_path",
    "alternating_path": "alternating_path",
    "onedirpath": "one_directional_path",
    "one_directional_path": "one_directional_path",
    "tmax": "tournament_max",
    "tournament_max": "tournament_max",
    "tmin": "tournament_min",
    "tournament_min": "tournament_min",
    "star": "star",
    "doublestar": "double_star",
    "double_star": "double_star",
    "augstar": "augmented_double_star",
    "augmented_double_star": "augmented_double_star",
    "doublearc": "double_arc_of",
    "double_arc_of": "double_arc_of",
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "empty": "empty",
}

UNDIRECTED = {"star", "double_star", "augmented_double_star", "path", "cycle", "complete", "empty"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        name, _, rest = text.strip().partition(":")
        family = ALIASES.get(name.strip().lower())
        if family is None:
            raise PreconditionError(f"unknown family {name!r}")
        if family == "double_arc_of":
            inner = cls.parse(rest)
            if inner.family not in UNDIRECTED:
                raise PreconditionError("doublearc needs an undirected family")
            return cls(family, (inner,))
        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError:
            raise PreconditionError(f"non-integer parameter in {text!r}") from None
        return cls(family, params)

    @property
    def directed(self) -> bool:
        return self.family not in UNDIRECTED

    def __str__(self):
        if self.family == "double_arc_of":
            return f"double_arc_of:{self.params[0]}"
        return f"{self.family}:{','.join(map(str, self.params))}"


def _need(params, count, name, optional=0):
    if not count <= len(params) <= count + optional:
        raise PreconditionError(f"{name} takes {count} parameter(s), got {len(params)}")


@dataclass(frozen=True)
class HostGraph:
    """The grid digraph H_{a,c}: ``a`` rows, ``c`` columns, cell (i, j) has index ``i*c + j``."""

    a: int
    c: int
    digraph: Digraph

    def cell(self, i: int, j: int) -> int:
        if not (0 <= i < self.a and 0 <= j < self.c):
            raise PreconditionError(f"cell ({i},{j}) outside {self.a}x{self.c} grid")
        return i * self.c + j

    def coords(self, v: int) -> tuple[int, int]:
        return divmod(v, self.c)

    def is_path_arc(self, u: int, v: int) -> bool:
        (i, j), (k, l) = self.coords(u), self.coords(v)
        return i == k and l == j + 1

    def path_arcs(self) -> list[tuple[int, int]]:
        return [(self.cell(i, j), self.cell(i, j + 1)) for i in range(self.a) for j in range(self.c - 1)]

    def non_path_arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.digraph.arcs() if not self.is_path_arc(u, v)]


def host_has_arc(cell_from, cell_to) -> bool:
    """Arc rule of the host grid, on (row, column) pairs."""
    (h, k), (l, m) = cell_from, cell_to
    if (h, k) == (l, m):
        return False
    if m < k:
        return True
    if m == k:
        return h != l
    return h == l and m == k + 1


def host_graph(a: int, c: int) -> HostGraph:
    if a < 1 or c < 1:
        raise PreconditionError(f"host needs a >= 1 rows and at least one column, got ({a},{c})")
    cells = [(i, j) for i in range(a) for j in range(c)]
    rows = []
    for p in cells:
        r = 0
        for idx, q in enumerate(cells):
            if host_has_arc(p, q):
                r |= 1 << idx
        rows.append(r)
    return HostGraph(a, c, Digraph(a * c, tuple(rows)))


def host_arc_count(a: int, c: int) -> int:
    b = c - 1
    return a * (b + 1) * (a - 1) + a * b + a * a * b * (b + 1) // 2


def hessenberg_path(n: int, back_mask: int | None = None) -> Digraph:
    """Forward path 0->1->...->n-1 plus back arcs; ``back_mask`` bit p keeps the p-th back arc (i, j), i > j, in lexicographic order."""
    if n < 1:
        raise PreconditionError("hessenberg needs n >= 1")
    arcs = [(i, i + 1) for i in range(n - 1)]
    back = [(i, j) for i in range(n) for j in range(i)]
    for p, arc in enumerate(back):
        if back_mask is None or back_mask >> p & 1:
            arcs.append(arc)
    return Digraph.from_arcs(n, arcs)


def one_directional_path(n: int) -> Digraph:
    if n < 1:
        raise PreconditionError("path needs n >= 1")
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def alternating_path(n: int, flip: int = 0) -> Digraph:
    """Every vertex a source or a sink.  Vertex 0 is a sink (so odd n has sink ends); ``flip=1`` transposes."""
    if n < 1:
        raise PreconditionError("path needs n >= 1")
    arcs = []
    for i in range(n - 1):
        src, dst = (i + 1, i) if i % 2 == 0 else (i, i + 1)
        arcs.append((dst, src) if flip else (src, dst))
    return Digraph.from_arcs(n, arcs)


def tournament_max(n: int) -> Digraph:
    if n < 1:
        raise PreconditionError("tournament needs n >= 1")
    return Digraph.from_arcs(n, [(i, j) for i in range(n) for j in range(i)])


def tournament_min_params(n: int) -> tuple[int, int, int, int]:
    """(m, r, k, contractions) for the smallest-host construction."""
    m = isqrt(n)
    r = n - m * m
    k = 0 if r == 0 else (1 if r <= m else 2)
    return m, r, k, (m + k) * m - n


def tournament_min(n: int) -> Digraph:
    """Tournament with throttling number ceil(2*sqrt(n) - 1), cut from a host grid.

    Take H_{m+k,m}, merge the first cells of the top row along path arcs until
    n vertices remain, then break each double arc: keep a path arc over its
    reverse, otherwise keep the arc leaving the higher row.
    """
    if n < 1:
        raise PreconditionError("tournament needs n >= 1")
    m, _, k, contract = tournament_min_params(n)
    rows_, cols = m + k, m
    host = host_graph(rows_, cols)
    top = rows_ - 1
    group = {}
    for v in range(rows_ * cols):
        i, j = host.coords(v)
        group[v] = host.cell(top, 0) if i == top and j <= contract else v
    reps = sorted(set(group.values()))
    label = {r: idx for idx, r in enumerate(reps)}
    top_row = {label[group[v]]: host.coords(v)[0] for v in range(rows_ * cols)}
    path_pairs = set()
    arcs = set()
    for u, v in host.digraph.arcs():
        x, y = label[group[u]], label[group[v]]
        if x == y:
            continue
        arcs.add((x, y))
        if host.is_path_arc(u, v):
            path_pairs.add((x, y))
    keep = set()
    for x, y in arcs:
        if (y, x) not in arcs:
            keep.add((x, y))
        elif (x, y) in path_pairs:
            keep.add((x, y))
        elif (y, x) in path_pairs:
            continue
        elif top_row[x] > top_row[y]:
            keep.add((x, y))
    return Digraph.from_arcs(len(reps), keep)


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> UndirectedGraph:
    if n < 3:
        raise PreconditionError("cycle needs n >= 3")
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> UndirectedGraph:
    """Star on n vertices, center 0."""
    if n < 2:
        raise PreconditionError("star needs n >= 2")
    return UndirectedGraph.from_edges(n, [(0, i) for i in range(1, n)])


def double_star(s: int, t: int) -> UndirectedGraph:
    """Centers 0 and 1 joined by an edge; s leaves on 0, then t leaves on 1."""
    if s < 1 or t < 1:
        raise PreconditionError("double star leaf counts must be >= 1")
    edges = [(0, 1)] + [(0, 2 + i) for i in range(s)] + [(1, 2 + s + i) for i in range(t)]
    return UndirectedGraph.from_edges(s + t + 2, edges)


def augmented_double_star(s: int, t: int) -> UndirectedGraph:
    """Centers a=0, b=1 both joined to w=2 (not to each other); s leaves on a, t on b."""
    if s < 1 or t < 1:
        raise PreconditionError("double star leaf counts must be >= 1")
    edges = [(0, 2), (1, 2)] + [(0, 3 + i) for i in range(s)] + [(1, 3 + s + i) for i in range(t)]
    return UndirectedGraph.from_edges(s + t + 3, edges)


def generate(spec) -> Digraph | UndirectedGraph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    f, p = spec.family, spec.params
    if f == "host":
        _need(p, 2, "host")
        return host_graph(*p).digraph
    if f == "hessenberg":
        _need(p, 1, "hessenberg", optional=1)
        return hessenberg_path(*p)
    if f == "alternating_path":
        _need(p, 1, "altpath", optional=1)
        return alternating_path(*p)
    if f == "one_directional_path":
        _need(p, 1, "onedirpath")
        return one_directional_path(*p)
    if f == "tournament_max":
        _need(p, 1, "tmax")
        return tournament_max(*p)
    if f == "tournament_min":
        _need(p, 1, "tmin")
        return tournament_min(*p)
    if f == "double_arc_of":
        return to_double_arc(generate(p[0]))
    if f == "star":
        _need(p, 1, "star")
        return star(*p)
    if f == "double_star":
        _need(p, 2, "doublestar")
        return double_star(*p)
    if f == "augmented_double_star":
        _need(p, 2, "augstar")
        return augmented_double_star(*p)
    if f == "path":
        _need(p, 1, "path")
        return path_graph(*p)
    if f == "cycle":
        _need(p, 1, "cycle")
        return cycle_graph(*p)
    if f == "complete":
        _need(p, 1, "complete")
        return complete_graph(*p)
    if f == "empty":
        _need(p, 1, "empty")
        return UndirectedGraph(p[0], (0,) * p[0])
    raise PreconditionError(f"unknown family {f!r}")


def is_tournament(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    return all(
        not (d.out_adj[v] & d.in_adj[v]) and (d.out_adj[v] | d.in_adj[v]) == full & ~(1 << v)
        for v in range(d.n)
    )


def leaf_counts(g: UndirectedGraph) -> tuple[int, int]:
    """(x, y): vertices adjacent to a leaf, and number of leaves."""
    leaves = g.leaves()
    support = 0
    for v in members(leaves):
        support |= g.adj[v]
    return bin(support).count("1"), bin(leaves).count("1")
