"""Surfaces ``S = (C x D)/G`` isogenous to a product, unmixed type, abelian ``G``.

Both quotients ``C/G`` and ``D/G`` are ``P^1`` (the data are spherical
systems), so ``q(S) = 0`` throughout.

The translation automorphisms ``(G x G)/Delta_G`` are identified with ``G``
via ``sigma -> class of (sigma, 1)``.  Such an element acts trivially on
rational cohomology exactly when every *mixing* character ``chi`` (one with
``H^1(C)^chi != 0`` and ``H^1(D)^conj(chi) != 0``) satisfies ``chi(sigma) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .abelian import AbelianGroup, Character, Subgroup, intersect, kernel, subgroup_generated
from .exceptions import GenusTooSmall, NotDisjoint, StructuralError, UnknownFamily
from .spherical import CoverData, SphericalSystem, eigenspace_dim, genus, is_disjoint, validate_system

__all__ = [
    "ProductSurface",
    "InvariantSet",
    "CohomologyRow",
    "CohomologyTable",
    "NumTrivialReport",
    "build_surface",
    "invariants",
    "h2_table",
    "numerically_trivial_subgroup",
    "family",
    "FAMILIES",
    "AUT_Q_BOUND_CHI",
]

# |Aut_Q(S)| <= 4 is known once chi(O_S) exceeds this value
AUT_Q_BOUND_CHI = 188


@dataclass(frozen=True)
class ProductSurface:
    group: AbelianGroup
    system_c: SphericalSystem
    system_d: SphericalSystem
    cover_c: CoverData = field(compare=False)
    cover_d: CoverData = field(compare=False)

    def __repr__(self):
        return (
            f"ProductSurface({self.group.orders}, g(C)={self.cover_c.genus}, "
            f"g(D)={self.cover_d.genus})"
        )

    def swapped(self) -> ProductSurface:
        return build_surface(self.group, self.system_d, self.system_c)

    @cached_property
    def invariants(self) -> InvariantSet:
        return invariants(self)


@dataclass(frozen=True)
class InvariantSet:
    chi: int
    k_squared: int
    euler: int
    q: int
    p_g: int
    b2: int

    def as_dict(self) -> dict[str, int]:
        return {
            "chi": self.chi,
            "k_squared": self.k_squared,
            "euler": self.euler,
            "q": self.q,
            "p_g": self.p_g,
            "b2": self.b2,
        }


@dataclass(frozen=True)
class CohomologyRow:
    character: Character
    dim_c: int
    dim_d: int

    @property
    def product(self) -> int:
        return self.dim_c * self.dim_d


@dataclass(frozen=True)
class CohomologyTable:
    """Rows ``(chi, dim H^1(C)^chi, dim H^1(D)^conj(chi))`` for every character."""

    rows: tuple[CohomologyRow, ...]

    @property
    def mixing_set(self) -> tuple[Character, ...]:
        return tuple(row.character for row in self.rows if row.product > 0)

    @property
    def total(self) -> int:
        return sum(row.product for row in self.rows)

    def __iter__(self):
        return iter(self.rows)


@dataclass(frozen=True)
class NumTrivialReport:
    """Translation automorphisms acting trivially on ``H^*(S, Q)``.

    ``bound_applies`` is set when ``chi(O_S) > 188``; only then does a
    subgroup of order >= 4 equal the whole of ``Aut_Q(S)``.  Otherwise the
    report says nothing about automorphisms outside ``(G x G)/Delta_G``.
    """

    subgroup: Subgroup
    bound_applies: bool
    is_whole_group: bool

    @property
    def equals_aut_q(self) -> bool:
        return self.bound_applies and self.subgroup.order >= 4


def build_surface(group: AbelianGroup, a: SphericalSystem, b: SphericalSystem) -> ProductSurface:
    if a.group != group or b.group != group:
        raise StructuralError("both spherical systems must be over the given group")
    # genus first: a factor of genus <= 1 is rejected whatever the other factor is
    cover_c, cover_d = genus(a), genus(b)
    for name, cover in (("C", cover_c), ("D", cover_d)):
        if cover.genus < 2:
            raise GenusTooSmall(f"g({name}) = {cover.genus} < 2")
    if not is_disjoint(a, b):
        raise NotDisjoint("the stabilizer sets meet outside the identity; the diagonal action is not free")
    return ProductSurface(group, a, b, cover_c, cover_d)


def invariants(surface: ProductSurface) -> InvariantSet:
    n = surface.group.order
    num = (surface.cover_c.genus - 1) * (surface.cover_d.genus - 1)
    # freeness of the action forces |G| | (g(C)-1)(g(D)-1)
    assert num % n == 0, "non-integral chi(O_S)"
    chi = num // n
    euler = 4 * chi
    return InvariantSet(chi=chi, k_squared=8 * chi, euler=euler, q=0, p_g=chi - 1, b2=euler - 2)


def h2_table(surface: ProductSurface) -> CohomologyTable:
    rows = tuple(
        CohomologyRow(
            chi,
            eigenspace_dim(surface.system_c, chi),
            eigenspace_dim(surface.system_d, chi.conjugate()),
        )
        for chi in surface.group.character_group
    )
    return CohomologyTable(rows)


def numerically_trivial_subgroup(surface: ProductSurface) -> NumTrivialReport:
    group = surface.group
    sub = subgroup_generated(group, group.generators)
    for chi in h2_table(surface).mixing_set:
        sub = intersect(sub, kernel(chi))
    inv = invariants(surface)
    return NumTrivialReport(
        subgroup=sub,
        bound_applies=inv.chi > AUT_Q_BOUND_CHI,
        is_whole_group=sub.is_whole_group,
    )


def _z23(r: int):
    G = AbelianGroup((2, 2, 2))
    e1, e2, e3 = G.generators
    e = e1 + e2 + e3
    a = [e1 + e2] * (2 * r + 2) + [e1 + e3] * 2 + [e] * 2
    b = [e1, e1, e2, e3, e2 + e3]
    return G, a, b


def _z23prime(r: int):
    G = AbelianGroup((2, 2, 2))
    e1, e2, e3 = G.generators
    e = e1 + e2 + e3
    a = [e1 + e2] * 2 + [e1 + e3] * 2 + [e] * 2
    b = [e1] * (2 * r + 2) + [e2, e3, e2 + e3]
    return G, a, b


def _z24(r: int):
    G = AbelianGroup((2, 2, 2, 2))
    e1, e2, e3, e4 = G.generators
    e = e1 + e2 + e3 + e4
    a = [e1, e2, e3, e4, e]
    b = [e + e1] * (2 * r + 1) + [e + e2, e1 + e3, e2 + e4, e3 + e4]
    return G, a, b


FAMILIES = {"Z23": _z23, "Z23prime": _z23prime, "Z24": _z24}


def family(name: str, r: int) -> ProductSurface:
    """The unbounded example families over ``(Z/2)^3`` and ``(Z/2)^4``.

    ``r = 0`` gives the underlying surfaces with ``p_g = q = 0``.

    >>> S = family("Z23", 1)
    >>> S.cover_c.genus, S.cover_d.genus, S.invariants.chi
    (9, 3, 2)
    """
    try:
        recipe = FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}") from None
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    G, a, b = recipe(r)
    return build_surface(G, validate_system(G, a), validate_system(G, b))
