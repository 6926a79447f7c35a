"""Stabilizer chain against brute-force group closure."""

import random

from orbitalg.catalog import cyclic, dihedral, grid, make_group, subsets, symmetric
from orbitalg.chain import build_chain
from orbitalg.perms import Permutation

from _oracles import mulclose, point_orbit


def gen_arrays(group):
    return [g.images for g in group.generators]


def test_orders_match_brute_force():
    cases = [
        (symmetric(4), 24),
        (symmetric(5), 120),
        (cyclic(7), 7),
        (dihedral(6), 12),
        (subsets(5, 2), 120),
        (subsets(6, 2), 720),
        (grid(3), 72),
    ]
    for group, expected in cases:
        assert group.order() == expected
        closure = mulclose([tuple(g.images) for g in group.generators])
        assert len(closure) == expected


def test_large_orders():
    # too big to enumerate, pinned by the factorial formulas instead
    assert subsets(10, 3).order() == 3628800
    assert grid(5).order() == 2 * 120 * 120
    assert symmetric(8).order() == 40320


def test_membership():
    group = subsets(5, 2)
    ch = group.chain
    closure = mulclose([tuple(g.images) for g in group.generators])
    rng = random.Random(5)
    sample = rng.sample(sorted(closure), 50)
    for images in sample:
        assert Permutation(images) in group
    # a bare transposition of two pair-labels is not induced by any S5 element
    swap = Permutation.from_cycles(10, [(0, 1)])
    assert tuple(swap.images) not in closure
    assert swap not in group
    assert not ch.contains(Permutation.from_cycles(10, [(0, 1, 2)]))


def test_membership_wrong_degree():
    group = cyclic(5)
    assert Permutation.identity(4) not in group


def test_chain_is_deterministic():
    a = build_chain(gen_arrays(subsets(6, 2)), 15)
    b = build_chain(gen_arrays(subsets(6, 2)), 15)
    assert a.base == b.base
    assert a.order() == b.order()
    assert [len(lv.schreier) for lv in a.levels] == [len(lv.schreier) for lv in b.levels]
    assert [len(lv.gens) for lv in a.levels] == [len(lv.gens) for lv in b.levels]


def test_base_prefix_respected():
    group = subsets(5, 2)
    for p in (0, 3, 9):
        ch = group.chain_with_base(p)
        assert ch.base[0] == p
        assert ch.order() == 120


def test_default_base_starts_at_smallest_moved():
    group = symmetric(5)
    assert group.chain.base[0] == 0


def test_point_stabilizer_orbit_identity():
    # |G| = |orbit(p)| * |G_p| at every point, across several actions
    for group in (symmetric(5), subsets(5, 2), dihedral(8), grid(3), cyclic(12)):
        order = group.order()
        for p in range(group.degree):
            stab = group.point_stabilizer(p)
            orbit = group.orbit(p)
            assert len(orbit.points) * stab.order() == order
            for g in stab.generators:
                assert g.apply(p) == p


def test_point_stabilizer_contents():
    # stabilizer of point 0 in S5-on-pairs is S3 x S2 acting on the labels
    group = subsets(5, 2)
    stab = group.point_stabilizer(0)
    assert stab.order() == 12
    closure = mulclose([tuple(g.images) for g in stab.generators])
    full = mulclose([tuple(g.images) for g in group.generators])
    assert set(closure) == {p for p in full if p[0] == 0}


def test_trivial_group():
    group = make_group("cyclic", 1)
    assert group.order() == 1
    assert group.chain.base == ()
    assert Permutation.identity(1) in group


def test_orbit_transversal_maps_point():
    group = dihedral(7)
    orb = group.orbit(2)
    assert sorted(orb.points) == list(range(7))
    for target, rep in orb.transversal.items():
        assert rep.apply(2) == target
    assert set(point_orbit([tuple(g.images) for g in group.generators], 2)) == set(orb.points)
