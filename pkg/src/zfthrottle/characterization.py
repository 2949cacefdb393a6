"""Digraphs with th <= t as contractions/deletions of the host grid H_{a,b+1}.

A throttling certificate (B, F) is blown up along its forcing chains into an
``|B| x (pt+1)`` grid (the extension); the grid sits inside the host, and the
witness records which host arcs to delete and which path arcs to contract to
get back to the original digraph.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .digraph import Digraph, as_mask, members
from .errors import CapacityError, PreconditionError, WitnessError
from .families import HostGraph, host_graph, host_has_arc
from .forcing import NOT_FORCING, ForceSet, propagate_greedy, timeline_of_forces
from .throttling import throttling_number

ISO_CAP = 10


@dataclass(frozen=True)
class ExtensionBlueprint:
    B: int
    forces: ForceSet
    pt: int
    chains: tuple[tuple[int, ...], ...]
    tau: dict
    copies: tuple[tuple[int, int, int], ...]  # (vertex, row, column) per extension vertex
    placement: dict = field(compare=False)  # vertex -> list of (row, column)

    @property
    def rows(self) -> int:
        return len(self.chains)

    @property
    def cols(self) -> int:
        return self.pt + 1

    def cell_of(self, x: int) -> tuple[int, int]:
        return self.copies[x][1:]


def build_extension(d: Digraph, B, F: ForceSet) -> tuple[Digraph, ExtensionBlueprint]:
    B = as_mask(B)
    tl = timeline_of_forces(d, B, F)
    best = propagate_greedy(d, B).pt
    if tl.pt is NOT_FORCING or tl.pt != best:
        raise PreconditionError("forces must reach every vertex in pt(G;B) steps")
    pt = tl.pt
    born = {}
    for t, layer in enumerate(tl.layers):
        for v in members(layer):
            born[v] = t
    nxt = {f.u: f.w for f in F}
    chains = F.chains(B)
    tau = {}
    for chain in chains:
        for v in chain:
            tau[v] = (born[nxt[v]] if v in nxt else pt + 1) - born[v]

    cols = pt + 1
    copies = []
    placement = {}
    for i, chain in enumerate(chains):
        for v in chain:
            cells = [(i, born[v] + s) for s in range(tau[v])]
            placement[v] = cells
            copies.extend((v, i, j) for i, j in cells)
        assert sum(tau[v] for v in chain) == cols
    copies.sort(key=lambda c: (c[1], c[2]))
    index = {(i, j): x for x, (_, i, j) in enumerate(copies)}

    def first(v):
        return index[placement[v][0]]

    def last(v):
        return index[placement[v][-1]]

    chain_of = {v: i for i, chain in enumerate(chains) for v in chain}
    pos = {v: p for chain in chains for p, v in enumerate(chain)}
    arcs = set()
    for i in range(len(chains)):
        for j in range(cols - 1):
            arcs.add((index[(i, j)], index[(i, j + 1)]))
    for u, v in d.arcs():
        if chain_of[u] == chain_of[v]:
            if pos[v] == pos[u] + 1:
                continue  # realised by the path arc between the two runs of copies
            if pos[u] < pos[v]:
                raise AssertionError("forcing chain is not an induced Hessenberg path")
            arcs.add((first(u), first(v)))
        else:
            x, y = last(u), first(v)
            (_, ju), (_, jv) = copies[x][1:], copies[y][1:]
            if jv > ju:
                raise AssertionError("cross-chain arc points forward")
            arcs.add((x, y))
    ext = Digraph.from_arcs(len(copies), arcs)
    bp = ExtensionBlueprint(B, F, pt, tuple(map(tuple, chains)), tau, tuple(copies), placement)
    return ext, bp


def embeds_in_host(ext: Digraph, bp: ExtensionBlueprint, a: int, b: int, placement=None) -> bool:
    """Whether every extension arc is a host arc of H_{a,b+1} under the grid placement.

    ``placement`` maps extension vertex -> (row, column); defaults to the blueprint's.
    """
    if placement is None:
        placement = {x: bp.cell_of(x) for x in range(ext.n)}
    for x in range(ext.n):
        i, j = placement[x]
        if not (0 <= i < a and 0 <= j <= b):
            raise PreconditionError(f"cell ({i},{j}) outside {a}x{b + 1} grid")
    return all(host_has_arc(placement[x], placement[y]) for x, y in ext.arcs())


@dataclass(frozen=True)
class CharacterizationWitness:
    a: int
    b: int
    contract: tuple[tuple[int, int], ...]  # tail cell of each contracted path arc
    delete: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    placement: dict = field(default_factory=dict, compare=False)

    @property
    def t(self) -> int:
        return self.a + self.b

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "contract": [list(c) for c in self.contract],
            "delete": [[list(p), list(q)] for p, q in self.delete],
            "placement": {str(v): [list(c) for c in cells] for v, cells in sorted(self.placement.items())},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CharacterizationWitness":
        return cls(
            d["a"], d["b"],
            tuple(tuple(c) for c in d["contract"]),
            tuple((tuple(p), tuple(q)) for p, q in d["delete"]),
            {int(v): [tuple(c) for c in cells] for v, cells in d.get("placement", {}).items()},
        )


def witness_for_throttling(d: Digraph, t: int) -> CharacterizationWitness | None:
    cert = throttling_number(d)
    if cert.th > t:
        return None
    if d.n == 0:
        raise PreconditionError("the empty digraph has no host grid")
    ext, bp = build_extension(d, cert.B, cert.forces)
    a = bp.rows
    b = t - a
    assert embeds_in_host(ext, bp, a, b)
    placement = {v: list(cells) for v, cells in bp.placement.items()}
    # padding columns go to the last vertex of each chain
    for i, chain in enumerate(bp.chains):
        placement[chain[-1]].extend((i, j) for j in range(bp.cols, b + 1))
    owner = {cell: v for v, cells in placement.items() for cell in cells}
    contract = tuple(
        (i, j) for i in range(a) for j in range(b) if owner[(i, j)] == owner[(i, j + 1)]
    )
    kept = {(bp.cell_of(x), bp.cell_of(y)) for x, y in ext.arcs()}
    host = host_graph(a, b + 1)
    delete = tuple(
        (host.coords(u), host.coords(v))
        for u, v in host.non_path_arcs()
        if (host.coords(u), host.coords(v)) not in kept
    )
    return CharacterizationWitness(a, b, contract, delete, placement)


def _classes(host: HostGraph, contract) -> list[int]:
    """Representative (lowest cell index) of each cell after contracting the given path arcs."""
    parent = list(range(host.digraph.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in contract:
        x, y = find(host.cell(i, j)), find(host.cell(i, j + 1))
        parent[max(x, y)] = min(x, y)
    return [find(x) for x in range(host.digraph.n)]


def validate_witness(w: CharacterizationWitness) -> HostGraph:
    if w.a < 1 or w.b < 0:
        raise WitnessError(f"need a >= 1 and b >= 0, got a={w.a}, b={w.b}")
    host = host_graph(w.a, w.b + 1)
    for i, j in w.contract:
        if not (0 <= i < w.a and 0 <= j < w.b):
            raise WitnessError(f"({i},{j})->({i},{j + 1}) is not a path arc")
    if len(set(w.contract)) != len(w.contract):
        raise WitnessError("duplicate contraction")
    for p, q in w.delete:
        try:
            u, v = host.cell(*p), host.cell(*q)
        except PreconditionError as e:
            raise WitnessError(str(e)) from None
        if not host.digraph.has_arc(u, v):
            raise WitnessError(f"{p}->{q} is not a host arc")
        if host.is_path_arc(u, v):
            raise WitnessError(f"{p}->{q} is a path arc and cannot be deleted")
    if len(set(w.delete)) != len(w.delete):
        raise WitnessError("duplicate deletion")
    return host


def apply_witness(w: CharacterizationWitness) -> Digraph:
    """Delete, then contract, inside H_{a,b+1}; merged vertices are numbered by lowest cell."""
    host = validate_witness(w)
    gone = {(host.cell(*p), host.cell(*q)) for p, q in w.delete}
    rep = _classes(host, w.contract)
    label = {r: k for k, r in enumerate(sorted(set(rep)))}
    arcs = set()
    for u, v in host.digraph.arcs():
        if (u, v) in gone:
            continue
        x, y = label[rep[u]], label[rep[v]]
        if x != y:
            arcs.add((x, y))
    return Digraph.from_arcs(len(label), arcs)


def random_witness(a: int, b: int, rng: random.Random) -> CharacterizationWitness:
    host = host_graph(a, b + 1)
    contract = tuple((i, j) for i in range(a) for j in range(b) if rng.random() < 0.5)
    delete = tuple(
        (host.coords(u), host.coords(v)) for u, v in host.non_path_arcs() if rng.random() < 0.5
    )
    rep = _classes(host, contract)
    label = {r: k for k, r in enumerate(sorted(set(rep)))}
    placement = {}
    for x in range(host.digraph.n):
        placement.setdefault(label[rep[x]], []).append(host.coords(x))
    return CharacterizationWitness(a, b, contract, delete, placement)


def _signature(d: Digraph, v: int):
    return (d.in_degree(v), d.out_degree(v), bin(d.out_adj[v] & d.in_adj[v]).count("1"))


def are_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    if d1.n != d2.n or d1.num_arcs() != d2.num_arcs():
        return False
    n = d1.n
    if n > ISO_CAP:
        raise CapacityError(f"n={n} exceeds isomorphism cap {ISO_CAP}")
    sig1 = [_signature(d1, v) for v in range(n)]
    sig2 = [_signature(d2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False
    order = sorted(range(n), key=lambda v: sum(s == sig1[v] for s in sig1))
    image = {}
    used = set()

    def extend(k):
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if w in used or sig2[w] != sig1[v]:
                continue
            if all(
                d1.has_arc(v, x) == d2.has_arc(w, y) and d1.has_arc(x, v) == d2.has_arc(y, w)
                for x, y in image.items()
            ):
                image[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del image[v]
                used.discard(w)
        return False

    return extend(0)


def brute_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    """Permutation-by-permutation check, for testing ``are_isomorphic``."""
    if d1.n != d2.n:
        return False
    arcs2 = set(d2.arcs())
    return any(
        {(p[u], p[v]) for u, v in d1.arcs()} == arcs2 for p in itertools.permutations(range(d1.n))
    )
