from itertools import combinations_with_replacement, product

import numpy as np
import pytest

from isogenous import AbelianGroup, build_surface, family, invariants, validate_system
from isogenous.exceptions import InvalidSystem
from isogenous.search import (
    SearchConstraints,
    abelian_groups,
    automorphisms,
    classify_pgq0,
    enumerate_systems,
    find_disjoint_pairs,
)
from isogenous.spherical import genus, is_disjoint


def brute_systems(G, max_length):
    """Naive oracle: all ordered tuples, validated one by one, reduced to sorted multisets."""
    out = set()
    nontrivial = G.elements[1:]
    for r in range(3, max_length + 1):
        for t in product(nontrivial, repeat=r):
            try:
                validate_system(G, t)
            except InvalidSystem:
                continue
            out.add(tuple(sorted(t)))
    return out


def multiset_systems(G, max_length):
    out = []
    for r in range(3, max_length + 1):
        for t in combinations_with_replacement(G.elements[1:], r):
            try:
                out.append(validate_system(G, t))
            except InvalidSystem:
                pass
    return out


def keys(systems):
    return {tuple(s.entries) for s in systems}


@pytest.mark.parametrize("orders,max_length", [((2, 2), 3), ((2, 2), 4), ((4,), 4), ((3,), 4), ((2, 4), 3)])
def test_enumeration_matches_brute_force(orders, max_length):
    G = AbelianGroup(orders)
    got = list(enumerate_systems(G, SearchConstraints(max_length=max_length)))
    assert len(got) == len(keys(got))
    assert keys(got) == brute_systems(G, max_length)


def test_enumeration_examples():
    G = AbelianGroup((2, 2))
    e1, e2 = G.generators
    got = list(enumerate_systems(G, SearchConstraints(max_length=3)))
    assert [tuple(s.entries) for s in got] == [tuple(sorted([e1, e2, e1 + e2]))]
    assert list(enumerate_systems(AbelianGroup((2, 2, 2)), SearchConstraints(max_length=3))) == []
    Z = AbelianGroup((4,))
    got = keys(enumerate_systems(Z, SearchConstraints(max_length=3)))
    assert (Z.element(1), Z.element(1), Z.element(2)) in got


def test_enumeration_deterministic_and_sorted():
    G = AbelianGroup((2, 2, 2))
    cons = SearchConstraints(max_length=6)
    a = [tuple(s.entries) for s in enumerate_systems(G, cons)]
    b = [tuple(s.entries) for s in enumerate_systems(G, cons)]
    assert a == b
    assert a == sorted(a, key=lambda t: (len(t), [g.coords for g in t]))


def test_constraints_validation():
    with pytest.raises(ValueError):
        SearchConstraints(max_length=2)


def test_abelian_groups_counts():
    # number of abelian groups of order n is a product of partition numbers
    expected = {1: 1, 4: 2, 8: 3, 12: 2, 16: 5, 24: 3, 32: 7, 36: 4, 72: 6}
    for n, k in expected.items():
        gs = abelian_groups(n)
        assert len(gs) == k
        assert all(G.order == n for G in gs)
        for G in gs:
            assert all(G.orders[i + 1] % G.orders[i] == 0 for i in range(G.rank - 1))


@pytest.mark.parametrize(
    "orders,size",
    [((2, 2), 6), ((4,), 2), ((2, 4), 8), ((2, 2, 2), 168), ((3, 3), 48), ((5, 5), 480), ((2, 2, 2, 2), 20160)],
)
def test_automorphism_group_orders(orders, size):
    G = AbelianGroup(orders)
    perms = automorphisms(G)
    assert perms.shape == (size, G.order)
    assert len({tuple(p) for p in perms.tolist()}) == size
    # homomorphism check on all pairs through an independent addition table
    idx = {g: i for i, g in enumerate(G.elements)}
    add = np.array([[idx[a + b] for b in G.elements] for a in G.elements])
    sample = perms[:: max(1, size // 50)]
    for p in sample:
        assert np.array_equal(p[add], add[np.ix_(p, p)])
        assert sorted(p.tolist()) == list(range(G.order))


def _burnside_orbits(G, systems):
    perms = automorphisms(G)
    index = {g: i for i, g in enumerate(G.elements)}
    tuples = {tuple(sorted(index[g] for g in s.entries)) for s in systems}
    fixed = 0
    for p in perms:
        fixed += sum(1 for t in tuples if tuple(sorted(p[list(t)])) == t)
    assert fixed % len(perms) == 0
    return fixed // len(perms)


@pytest.mark.parametrize("orders,max_length", [((2, 2, 2), 6), ((3, 3), 4), ((2, 4), 4)])
def test_orbit_reduction_counts_match_burnside(orders, max_length):
    G = AbelianGroup(orders)
    full = list(enumerate_systems(G, SearchConstraints(max_length=max_length)))
    reduced = list(enumerate_systems(G, SearchConstraints(max_length=max_length, reduce_by_group_autos=True)))
    assert keys(reduced) <= keys(full)
    assert len(reduced) == _burnside_orbits(G, full)


def _pair_key(S):
    return tuple(S.system_c.entries), tuple(S.system_d.entries)


def brute_pairs(G, max_length, chi):
    found = set()
    syst = [s for s in multiset_systems(G, max_length) if genus(s).genus >= 2]
    for i, a in enumerate(syst):
        for b in syst[i:]:
            if not is_disjoint(a, b):
                continue
            if (genus(a).genus - 1) * (genus(b).genus - 1) != chi * G.order:
                continue
            found.add(frozenset([tuple(a.entries), tuple(b.entries)]))
    return found


@pytest.mark.parametrize("orders,chi,max_length", [((2, 2, 2), 1, 8), ((3, 3), 1, 8), ((2, 2, 2), 2, 7)])
def test_pairs_match_brute_force(orders, chi, max_length):
    G = AbelianGroup(orders)
    got = find_disjoint_pairs(G, SearchConstraints(max_length=max_length, target_chi=chi))
    got_keys = {frozenset(_pair_key(S)) for S in got}
    assert len(got_keys) == len(got)
    assert got_keys == brute_pairs(G, max_length, chi)


def test_pairs_include_z23_base():
    G = AbelianGroup((2, 2, 2))
    base = family("Z23", 0)
    target = frozenset([tuple(sorted(base.system_c.entries)), tuple(sorted(base.system_d.entries))])
    got = find_disjoint_pairs(G, SearchConstraints(target_chi=1))
    assert target in {frozenset(_pair_key(S)) for S in got}


def test_pairs_empty_and_nonempty():
    assert find_disjoint_pairs(AbelianGroup((2, 2)), SearchConstraints(target_chi=1)) == []
    assert find_disjoint_pairs(AbelianGroup((3, 3)), SearchConstraints(target_chi=1))


def test_pairs_sound():
    for orders in ((2, 2, 2), (5, 5)):
        G = AbelianGroup(orders)
        for S in find_disjoint_pairs(G, SearchConstraints(target_chi=1)):
            rebuilt = build_surface(G, S.system_c, S.system_d)
            assert invariants(rebuilt).chi == 1


def test_length_bound_widening_finds_nothing_new():
    G = AbelianGroup((2, 2, 2))
    a = find_disjoint_pairs(G, SearchConstraints(max_length=8, target_chi=1))
    b = find_disjoint_pairs(G, SearchConstraints(max_length=11, target_chi=1))
    assert [_pair_key(S) for S in a] == [_pair_key(S) for S in b]


def test_reduced_pairs_cover_all_orbits():
    G = AbelianGroup((2, 2, 2))
    cons = SearchConstraints(target_chi=2, max_length=7)
    full = find_disjoint_pairs(G, cons)
    reduced = find_disjoint_pairs(G, SearchConstraints(target_chi=2, max_length=7, reduce_by_group_autos=True))
    perms = automorphisms(G)
    elems = G.elements

    def image(p, S):
        return frozenset(
            tuple(sorted(elems[p[e.index]] for e in sys)) for sys in (S.system_c, S.system_d)
        )

    orbits = []
    for S in full:
        orbit = {image(p, S) for p in perms}
        if not any(orbit == o for o in orbits):
            orbits.append(orbit)
    assert len(reduced) == len(orbits)
    for R in reduced:
        assert sum(frozenset(_pair_key(R)) in o for o in orbits) == 1


def test_classify_small():
    assert classify_pgq0(7).groups_found == []
    res = classify_pgq0(8)
    assert res.orders_lists == {(2, 2, 2)}
    for G, S in res.witnesses.items():
        assert invariants(build_surface(G, S.system_c, S.system_d)).chi == 1


def test_classify_jobs_stable():
    a = classify_pgq0(10)
    b = classify_pgq0(10, jobs=2)
    assert a.groups_found == b.groups_found
    assert {G: _pair_key(S) for G, S in a.witnesses.items()} == {G: _pair_key(S) for G, S in b.witnesses.items()}


def test_classify_counts_informational():
    res = classify_pgq0(9, count_pairs=True)
    assert set(res.pair_counts) == set(res.groups_found)
    assert all(c >= 1 for c in res.pair_counts.values())
