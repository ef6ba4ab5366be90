import cmath
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isogenous import AbelianGroup, Character, characters, combine, element_order, intersect, kernel, subgroup_generated
from isogenous.abelian import cyclic_type
from isogenous.exceptions import StructuralError
from isogenous.search import abelian_groups

from .conftest import SMALL_GROUPS

groups = st.sampled_from(SMALL_GROUPS)


@st.composite
def group_and_elements(draw, k=2):
    G = draw(groups)
    idx = draw(st.lists(st.integers(0, G.order - 1), min_size=k, max_size=k))
    return G, [G.elements[i] for i in idx]


def test_combine_example(z23):
    G, e1, e2, e3, e = z23
    assert combine(e1 + e2, e1 + e3) == e2 + e3
    assert (e1 + e2 + e3).coords == (1, 1, 1)


def test_combine_rejects_other_group():
    a = AbelianGroup((2, 2)).element(1, 0)
    b = AbelianGroup((2, 2, 2)).element(1, 0, 0)
    with pytest.raises(StructuralError):
        combine(a, b)


def test_element_construction_reduces():
    G = AbelianGroup((4, 6))
    assert G.element(5, -1).coords == (1, 5)
    assert G.element([2, 3]) == G.element(2, 3)


def test_elements_identity_first_and_lex():
    G = AbelianGroup((2, 3))
    assert G.elements[0].is_identity
    assert [g.coords for g in G.elements] == sorted(g.coords for g in G.elements)
    assert all(G.index(g) == i for i, g in enumerate(G.elements))


@given(group_and_elements(k=3))
def test_group_axioms(data):
    G, (a, b, c) = data
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + G.identity == a
    assert (a + (-a)).is_identity


@given(group_and_elements(k=1))
def test_element_order_brute_force(data):
    G, (g,) = data
    k, x = 1, g
    while not x.is_identity:
        x, k = x + g, k + 1
    assert element_order(g) == k
    assert G.exponent % k == 0


def test_kernel_example(z23):
    G, e1, e2, e3, _ = z23
    chi = Character(G, (1, 0, 1))
    assert chi.rotation(e1) == Fraction(1, 2) and chi.rotation(e2) == 0
    ker = kernel(chi)
    assert ker.elements == subgroup_generated(G, [e2, e1 + e3]).elements
    assert ker.order == 4


def test_kernel_trivial_character_is_whole_group():
    G = AbelianGroup((3, 6))
    assert kernel(Character(G, (0, 0))).is_whole_group


def test_kernel_z5_squared():
    G = AbelianGroup((5, 5))
    assert all(kernel(chi).order == 5 for chi in characters(G) if not chi.is_trivial)


@given(groups)
def test_character_group_size_and_identity(G):
    chars = characters(G)
    assert len(chars) == G.order
    assert len(set(chars)) == G.order
    assert all(chi.rotation(G.identity) == 0 for chi in chars)


@given(groups)
def test_kernel_order_times_character_order(G):
    for chi in characters(G):
        assert kernel(chi).order * chi.order == G.order


@given(groups)
@settings(max_examples=30)
def test_orthogonality_numerically(G):
    # independent check through complex values: sum over G of chi(g) is |G| or 0
    for chi in characters(G):
        s = sum(cmath.exp(2j * cmath.pi * float(chi.rotation(g))) for g in G.elements)
        expected = G.order if chi.is_trivial else 0
        assert abs(s - expected) < 1e-9


@given(group_and_elements(k=2), st.data())
def test_character_is_homomorphism(data, draw):
    G, (a, b) = data
    chi = draw.draw(st.sampled_from(characters(G)))
    assert (chi.rotation(a) + chi.rotation(b)) % 1 == chi.rotation(a + b)
    assert (chi.rotation(a) + chi.conjugate().rotation(a)) % 1 == 0


@given(group_and_elements(k=3))
def test_subgroup_generated_idempotent(data):
    G, gens = data
    H = subgroup_generated(G, gens)
    assert subgroup_generated(G, list(H.elements)).elements == H.elements
    assert all(g in H for g in gens)


@given(group_and_elements(k=3), group_and_elements(k=3))
def test_intersect_commutative_associative(d1, d2):
    G, gens = d1
    H1 = subgroup_generated(G, gens[:1])
    H2 = subgroup_generated(G, gens[1:2])
    H3 = subgroup_generated(G, gens[2:])
    assert intersect(H1, H2).elements == intersect(H2, H1).elements
    assert intersect(intersect(H1, H2), H3).elements == intersect(H1, intersect(H2, H3)).elements


def _order_profile(elements):
    return Counter(element_order(g) for g in elements)


@given(group_and_elements(k=2))
def test_cyclic_type_against_order_profiles(data):
    # oracle: the unique abelian group of that order with the same element-order statistics
    G, gens = data
    H = subgroup_generated(G, gens)
    profile = _order_profile(H.elements)
    matches = [
        K.orders for K in abelian_groups(H.order) if _order_profile(K.elements) == profile
    ]
    assert matches == [H.cyclic_type()]


def test_cyclic_type_examples(z23):
    G, e1, e2, e3, _ = z23
    assert subgroup_generated(G, [e2, e1 + e3]).cyclic_type() == (2, 2)
    Z = AbelianGroup((2, 4))
    assert cyclic_type(Z.elements) == (2, 4)
    assert cyclic_type([AbelianGroup((6,)).identity]) == ()
