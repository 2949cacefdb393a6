import itertools

import pytest

from zfthrottle.digraph import Digraph, all_digraphs, disjoint_union, flip_arc, orientations_of, transpose
from zfthrottle.errors import DomainError, ForceSetError, NotForcingError, PreconditionError
from zfthrottle.families import alternating_path, one_directional_path, star, tournament_max
from zfthrottle.forcing import (
    NOT_FORCING, Force, ForceSet, all_force_sets, brute_force_pt, check_force_set, is_zfs,
    propagate_greedy, psd_propagate_path, psd_throttle_pinned, pt_k, pt_k_with_set, pt_min,
    pt_of_set, reverse, terminus, timeline_of_forces, valid_forces, zero_forcing_number,
)
from zfthrottle.throttling import th_of_set

from oracles import naive_pt, naive_ptk, naive_z


def test_valid_forces_p2():
    assert valid_forces(one_directional_path(2), [0]) == [Force(0, 1)]


def test_valid_forces_two_white():
    # middle vertex is the source of an alternating P3 built the other way round
    d = alternating_path(3)
    assert d.sources() == 0b010
    assert valid_forces(d, [1]) == []


def test_valid_forces_tournament_max():
    d = tournament_max(5)
    assert valid_forces(d, [4]) == []
    forces = valid_forces(d, [1, 2, 3, 4])
    assert {f.w for f in forces} == {0}
    assert Force(1, 0) in forces


def test_valid_forces_range():
    with pytest.raises(PreconditionError):
        valid_forces(one_directional_path(2), [5])


def test_greedy_path_examples():
    p = one_directional_path(4)
    assert propagate_greedy(p, [0]).pt == 3
    tl = propagate_greedy(p, [0, 2])
    assert tl.pt == 1 and tl.layers == (0b0101, 0b1010)
    assert propagate_greedy(p, range(4)).pt == 0


def test_greedy_attribution_smallest_forcer():
    d = tournament_max(4)
    tl = propagate_greedy(d, [1, 2, 3])
    assert tl.attribution == {0: 1}


def test_greedy_not_forcing():
    assert propagate_greedy(one_directional_path(3), [1]).pt is NOT_FORCING


def test_timeline_to_dict():
    tl = propagate_greedy(one_directional_path(3), [0])
    assert tl.to_dict() == {"pt": 2, "layers": [[0], [1], [2]], "forces": [[0, 1], [1, 2]]}
    assert propagate_greedy(one_directional_path(3), []).to_dict()["pt"] is None


def test_zero_forcing_numbers():
    for n in range(1, 8):
        assert zero_forcing_number(one_directional_path(n)) == 1
    assert zero_forcing_number(alternating_path(5)) == 3


def test_star_zfs_leaves():
    for d in orientations_of(star(4)):
        for r in range(5):
            for B in itertools.combinations(range(4), r):
                if is_zfs(d, B):
                    assert len(set(B) & {1, 2, 3}) >= 2


def test_is_zfs_contains_sources():
    for d in all_digraphs(3):
        for B in range(8):
            if is_zfs(d, B):
                assert d.sources() & ~B == 0


def test_timeline_chain():
    F = ForceSet([(0, 1), (1, 2)])
    assert timeline_of_forces(one_directional_path(3), [0], F).pt == 2


def test_timeline_missing_force():
    F = ForceSet([(0, 1)])
    assert timeline_of_forces(one_directional_path(3), [0], F).pt is NOT_FORCING


def test_timeline_two_paths():
    p = one_directional_path(4)
    d = disjoint_union(p, p)
    # both sources plus the second vertex of one path: 3 seeds, pt 3
    B = [0, 4, 5]
    F = ForceSet([(0, 1), (1, 2), (2, 3), (5, 6), (6, 7)])
    assert timeline_of_forces(d, B, F).pt == 3
    # the throttling value 5 comes from 4 seeds and one round
    B = [0, 2, 4, 6]
    F = ForceSet([(0, 1), (2, 3), (4, 5), (6, 7)])
    assert timeline_of_forces(d, B, F).pt == 1


@pytest.mark.parametrize("forces", [
    [(0, 2)],            # not an arc
    [(0, 1), (0, 1)],    # forced twice
    [(1, 0)],            # not an arc
    [(0, 1), (2, 1)],    # target forced twice
])
def test_invalid_force_sets(forces):
    d = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 1)])
    with pytest.raises(ForceSetError):
        check_force_set(d, [0], ForceSet(forces))


def test_force_not_performable():
    # 0 has two out-neighbors, so 0->1 can never fire while 2 is white and nobody forces 2
    d = Digraph.from_arcs(3, [(0, 1), (0, 2)])
    with pytest.raises(ForceSetError):
        timeline_of_forces(d, [0], ForceSet([(0, 1)]))


def test_force_target_initially_blue():
    with pytest.raises(ForceSetError):
        check_force_set(one_directional_path(2), [0, 1], ForceSet([(0, 1)]))


def test_pt_min_path_and_flip():
    p = one_directional_path(4)
    assert pt_min(p) == 3
    assert pt_min(flip_arc(p, 0, 1)) == 1


def test_pt_k_full_is_zero():
    for d in [tournament_max(4), alternating_path(5), one_directional_path(3)]:
        assert pt_k(d, d.n) == 0


def test_pt_k_domain():
    d = alternating_path(5)
    with pytest.raises(DomainError):
        pt_k(d, 2)
    with pytest.raises(DomainError):
        pt_k(d, 6)


def test_pt_k_with_set_attains():
    d = alternating_path(7)
    for k in range(zero_forcing_number(d), 8):
        pt, B = pt_k_with_set(d, k)
        assert bin(B).count("1") == k
        assert pt_of_set(d, B) == pt


def test_pt_k_oracle_small():
    for d in all_digraphs(3):
        z = naive_z(d)
        assert zero_forcing_number(d) == z
        for k in range(z, 4):
            assert pt_k(d, k) == naive_ptk(d, k)


def test_terminus_and_reverse():
    F = ForceSet([(0, 1), (1, 2)])
    assert terminus(F, 3) == 0b100
    assert reverse(F) == ForceSet([(2, 1), (1, 0)])


def test_force_set_equality_is_set_based():
    assert ForceSet([(0, 1), (1, 2)]) == ForceSet([(1, 2), (0, 1)])
    assert hash(ForceSet([(0, 1), (1, 2)])) == hash(ForceSet([(1, 2), (0, 1)]))
    assert ForceSet([(0, 1), (1, 2)]).chains(1) == [[0, 1, 2]]


def test_terminus_size_and_reversal_small():
    for d in all_digraphs(3):
        dt = transpose(d)
        for B in range(8):
            tl = propagate_greedy(d, B)
            if tl.pt is NOT_FORCING:
                continue
            term = terminus(tl.forces, 3)
            assert bin(term).count("1") == bin(B).count("1")
            assert timeline_of_forces(dt, term, reverse(tl.forces)).pt == tl.pt


def test_brute_force_basics():
    d = tournament_max(4)
    assert brute_force_pt(d, 0b1111) == 0
    assert brute_force_pt(one_directional_path(3), [1]) is NOT_FORCING


def test_greedy_equals_brute_force_n3():
    for d in all_digraphs(3):
        for B in range(8):
            g = propagate_greedy(d, B).pt
            b = brute_force_pt(d, B)
            o = naive_pt(d, [v for v in range(3) if B >> v & 1])
            assert (g is NOT_FORCING) == (b is NOT_FORCING) == (o is None)
            if o is not None:
                assert g == b == o


def test_all_force_sets_complete_sets():
    sets = all_force_sets(tournament_max(3), [1, 2])
    assert sets == {frozenset({Force(1, 0)}), frozenset({Force(2, 0)})}


def test_th_of_set_examples():
    assert th_of_set(tournament_max(4), 0b1111) == 4
    assert th_of_set(one_directional_path(4), [0, 2]) == 3
    # sources 1 and 3, plus the middle sink 2
    assert th_of_set(alternating_path(5), [1, 3, 2]) == 4
    assert th_of_set(one_directional_path(3), [1]) is NOT_FORCING


def test_not_forcing_arithmetic():
    with pytest.raises(NotForcingError):
        NOT_FORCING + 1
    with pytest.raises(NotForcingError):
        1 + NOT_FORCING
    with pytest.raises(NotForcingError):
        NOT_FORCING < 3
    assert repr(NOT_FORCING) == "NOT_FORCING"


def test_psd_examples():
    assert psd_propagate_path(1, [0]) == 0
    assert psd_propagate_path(5, [2]) == 2
    # 9-vertex auxiliary path with u0 pinned
    assert psd_propagate_path(9, [0, 5, 8]) <= 2
    with pytest.raises(PreconditionError):
        psd_propagate_path(0, [])


def test_psd_pinned_small():
    assert psd_throttle_pinned(1) == (1, 0, 1)
    size, pt, th = psd_throttle_pinned(9)
    assert size + pt == th
