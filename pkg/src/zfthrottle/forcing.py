"""Zero forcing dynamics on simple digraphs.

A blue vertex ``u`` forces ``w`` when ``w`` is the only white out-neighbor of
``u``.  Propagation times come from the greedy process that performs every
available force in each round.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .digraph import Digraph, as_mask, members, popcount
from .errors import CapacityError, DomainError, ForceSetError, NotForcingError, PreconditionError

BRUTE_FORCE_CAP = 8


class _NotForcing:
    """Propagation time of a set that never turns every vertex blue."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NOT_FORCING"

    def _refuse(self, *_):
        raise NotForcingError("NOT_FORCING is not a number")

    __add__ = __radd__ = __sub__ = __rsub__ = __lt__ = __le__ = __gt__ = __ge__ = _refuse
    __int__ = __index__ = __float__ = _refuse


NOT_FORCING = _NotForcing()


class Force(NamedTuple):
    u: int
    w: int


@dataclass(frozen=True)
class ForceSet:
    forces: tuple[Force, ...]

    def __init__(self, forces=()):
        object.__setattr__(self, "forces", tuple(Force(*f) for f in forces))

    def __len__(self):
        return len(self.forces)

    def __iter__(self):
        return iter(self.forces)

    def as_set(self) -> frozenset:
        return frozenset(self.forces)

    def __eq__(self, other):
        return isinstance(other, ForceSet) and self.as_set() == other.as_set()

    def __hash__(self):
        return hash(self.as_set())

    def forcers(self) -> int:
        return as_mask(f.u for f in self.forces)

    def targets(self) -> int:
        return as_mask(f.w for f in self.forces)

    def chains(self, B) -> list[list[int]]:
        """Maximal forcing chains, one per vertex of ``B``, in increasing start order."""
        nxt = {f.u: f.w for f in self.forces}
        out = []
        for b in members(as_mask(B)):
            chain = [b]
            while chain[-1] in nxt:
                chain.append(nxt[chain[-1]])
            out.append(chain)
        return out


def terminus(F: ForceSet, n: int) -> int:
    """Vertices that perform no force."""
    return ((1 << n) - 1) & ~F.forcers()


def reverse(F: ForceSet) -> ForceSet:
    return ForceSet(Force(f.w, f.u) for f in F.forces)


@dataclass(frozen=True)
class Timeline:
    layers: tuple[int, ...]
    attribution: dict
    pt: object

    @property
    def forces(self) -> ForceSet:
        return ForceSet(Force(u, w) for w, u in sorted(self.attribution.items()))

    def blue_at(self, t: int) -> int:
        m = 0
        for layer in self.layers[: t + 1]:
            m |= layer
        return m

    def to_dict(self) -> dict:
        return {
            "pt": None if self.pt is NOT_FORCING else self.pt,
            "layers": [members(layer) for layer in self.layers],
            "forces": [[f.u, f.w] for f in sorted(self.forces.forces)],
        }


def _rows(d: Digraph):
    if d.n > _kernels.KERNEL_MAX_N:
        raise CapacityError(f"n={d.n} exceeds kernel cap {_kernels.KERNEL_MAX_N}")
    return np.array(d.out_adj or (0,), dtype=np.int64), np.array(d.in_adj or (0,), dtype=np.int64)


def _check_subset(d: Digraph, blue: int):
    if blue >> d.n:
        raise PreconditionError("vertex set contains vertices outside the digraph")


def _forces_from(d: Digraph, blue: int, allowed=None) -> list[Force]:
    res = []
    for u in members(blue):
        white = d.out_adj[u] & ~blue
        if white and not white & (white - 1):
            f = Force(u, white.bit_length() - 1)
            if allowed is None or f in allowed:
                res.append(f)
    return res


def valid_forces(d: Digraph, blue) -> list[Force]:
    blue = as_mask(blue)
    _check_subset(d, blue)
    return _forces_from(d, blue)


def _run(d: Digraph, blue: int, allowed=None) -> Timeline:
    full = (1 << d.n) - 1
    layers = [blue]
    attribution = {}
    while blue != full:
        new = 0
        for f in _forces_from(d, blue, allowed):
            if not new >> f.w & 1:
                attribution[f.w] = f.u
                new |= 1 << f.w
        if not new:
            return Timeline(tuple(layers), attribution, NOT_FORCING)
        layers.append(new)
        blue |= new
    return Timeline(tuple(layers), attribution, len(layers) - 1)


def propagate_greedy(d: Digraph, B) -> Timeline:
    """Perform every valid force each round; credit goes to the smallest forcer."""
    B = as_mask(B)
    _check_subset(d, B)
    return _run(d, B)


def is_zfs(d: Digraph, B) -> bool:
    B = as_mask(B)
    ok = propagate_greedy(d, B).pt is not NOT_FORCING
    if ok:
        assert d.sources() & ~B == 0, "zero forcing set missing a source"
    return ok


def check_force_set(d: Digraph, B, F: ForceSet):
    """Raise ForceSetError unless ``F`` can be performed in some order starting from ``B``."""
    B = as_mask(B)
    seen_u, seen_w = set(), set()
    for f in F:
        if not d.has_arc(f.u, f.w):
            raise ForceSetError(f"force {f.u}->{f.w} is not an arc")
        if f.u in seen_u:
            raise ForceSetError(f"vertex {f.u} forces twice")
        if f.w in seen_w:
            raise ForceSetError(f"vertex {f.w} forced twice")
        if B >> f.w & 1:
            raise ForceSetError(f"vertex {f.w} is initially blue")
        seen_u.add(f.u)
        seen_w.add(f.w)
    pending = set(F.forces)
    blue = B
    while pending:
        ready = [f for f in _forces_from(d, blue) if f in pending]
        if not ready:
            raise ForceSetError("forces cannot be performed in any order")
        f = ready[0]
        blue |= 1 << f.w
        pending.discard(f)


def timeline_of_forces(d: Digraph, B, F: ForceSet) -> Timeline:
    """Time the forces of ``F``: a force fires once its forcer is blue and its target is that forcer's only white out-neighbor."""
    B = as_mask(B)
    _check_subset(d, B)
    check_force_set(d, B, F)
    return _run(d, B, F.as_set())


def pt_of_set(d: Digraph, B):
    return propagate_greedy(d, B).pt


def zero_forcing_number(d: Digraph) -> int:
    if d.n == 0:
        return 0
    out, inn = _rows(d)
    return int(_kernels.zero_forcing_number(out, inn, d.n))


def pt_k_with_set(d: Digraph, k: int):
    """(pt_k, a set of size k attaining it)."""
    z = zero_forcing_number(d)
    if not z <= k <= d.n:
        raise DomainError(f"k={k} outside [Z, n] = [{z}, {d.n}]")
    if d.n == 0:
        return 0, 0
    out, inn = _rows(d)
    pt, mask = _kernels.min_pt_of_size(out, inn, d.n, k)
    return int(pt), int(mask)


def pt_k(d: Digraph, k: int) -> int:
    return pt_k_with_set(d, k)[0]


def pt_min(d: Digraph) -> int:
    return pt_k(d, zero_forcing_number(d))


def all_force_sets(d: Digraph, B) -> set[frozenset]:
    """Every set of forces of ``B``: all maximal sequential runs, as sets."""
    if d.n > BRUTE_FORCE_CAP:
        raise CapacityError(f"n={d.n} exceeds brute-force cap {BRUTE_FORCE_CAP}")
    B = as_mask(B)
    results = set()
    seen = set()
    stack = [frozenset()]
    while stack:
        done = stack.pop()
        if done in seen:
            continue
        seen.add(done)
        blue = B | as_mask(f.w for f in done)
        nxt = _forces_from(d, blue)
        if not nxt:
            results.add(done)
        for f in nxt:
            stack.append(done | {f})
    return results


def brute_force_pt(d: Digraph, B):
    """Least timeline pt over every set of forces of ``B`` (test oracle)."""
    B = as_mask(B)
    best = NOT_FORCING
    for F in all_force_sets(d, B):
        pt = _run(d, B, F).pt
        if pt is not NOT_FORCING and (best is NOT_FORCING or pt < best):
            best = pt
    return best


def psd_propagate_path(path_len: int, B):
    """Rounds until a path is blue when every blue vertex colors all its neighbors each round."""
    if path_len < 1:
        raise PreconditionError("empty path")
    blue = as_mask(B)
    full = (1 << path_len) - 1
    if blue & ~full:
        raise PreconditionError("vertex outside path")
    if not blue:
        return NOT_FORCING
    t = 0
    while blue != full:
        blue |= ((blue << 1) | (blue >> 1)) & full
        t += 1
    return t


def psd_throttle_pinned(m: int) -> tuple[int, int, int]:
    """(size, pt, th) minimising ``|B| + pt`` over sets on an m-vertex path that contain vertex 0."""
    if m < 1:
        raise PreconditionError("empty path")
    best = None
    for rest in range(1 << (m - 1)):
        B = 1 | rest << 1
        pt = psd_propagate_path(m, B)
        cand = (popcount(B) + pt, popcount(B), pt)
        if best is None or cand < best:
            best = cand
    th, size, pt = best
    return size, pt, th


__all__ = [
    "NOT_FORCING", "Force", "ForceSet", "Timeline", "terminus", "reverse", "valid_forces",
    "propagate_greedy", "is_zfs", "check_force_set", "timeline_of_forces", "pt_of_set",
    "zero_forcing_number", "pt_k", "pt_k_with_set", "pt_min", "all_force_sets", "brute_force_pt",
    "psd_propagate_path", "psd_throttle_pinned",
]
