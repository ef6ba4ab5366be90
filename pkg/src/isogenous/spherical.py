"""Spherical systems of generators and the abelian covers of P^1 they define.

A spherical system ``(a_1, ..., a_r)`` of an abelian group ``G`` is a tuple of
nontrivial elements summing to zero and generating ``G``.  It determines a
Galois ``G``-cover ``C -> P^1`` branched at ``r`` points, the stabilizers over
the ``i``-th branch point being conjugates of ``<a_i>``.  Everything here is
computed from that branch data: genus (Riemann-Hurwitz), fixed-point counts,
and dimensions of character eigenspaces of ``H^1(C, C)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .abelian import AbelianGroup, Character, GroupElement, _closure
from .exceptions import (
    ContainsIdentity,
    DoesNotGenerate,
    IdentityElement,
    ProductNotIdentity,
    StructuralError,
    TooShort,
)

__all__ = [
    "SphericalSystem",
    "CoverData",
    "validate_system",
    "sigma_set",
    "is_disjoint",
    "genus",
    "fixed_count",
    "eigenspace_dim",
    "eigenspace_profile",
]


def _cyclic(g: GroupElement) -> frozenset[GroupElement]:
    out = {g.group.identity}
    x = g
    while not x.is_identity:
        out.add(x)
        x = x + g
    return frozenset(out)


@dataclass(frozen=True)
class SphericalSystem:
    """Validated ordered tuple of branch data; construct with :func:`validate_system`."""

    group: AbelianGroup
    entries: tuple[GroupElement, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        _check(self.group, entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"SphericalSystem({self.group.orders}, {[g.coords for g in self.entries]})"

    @property
    def length(self) -> int:
        return len(self.entries)

    @cached_property
    def branch_orders(self) -> tuple[int, ...]:
        return tuple(g.order for g in self.entries)

    @cached_property
    def multiplicities(self) -> dict[GroupElement, int]:
        return dict(Counter(self.entries))

    @cached_property
    def stabilizers(self) -> tuple[frozenset[GroupElement], ...]:
        """The cyclic subgroups ``<a_i>``."""
        cyclic = {g: _cyclic(g) for g in self.multiplicities}
        return tuple(cyclic[g] for g in self.entries)

    def canonical(self) -> SphericalSystem:
        """Entries sorted lexicographically; all numerical data depends only on this."""
        return SphericalSystem(self.group, tuple(sorted(self.entries)))

    def coords(self) -> list[list[int]]:
        return [list(g.coords) for g in self.entries]

    @classmethod
    def from_coords(cls, group: AbelianGroup, coords: Iterable[Sequence[int]]) -> SphericalSystem:
        return validate_system(group, [group.element(tuple(c)) for c in coords])


@dataclass(frozen=True)
class CoverData:
    genus: int
    branch_orders: tuple[int, ...]
    total_space_euler: int


def _check(group: AbelianGroup, entries: tuple[GroupElement, ...]) -> None:
    if not entries:
        raise TooShort("a spherical system needs at least 3 entries, got 0")
    for i, g in enumerate(entries):
        if g.group != group:
            raise StructuralError(f"entry {i} belongs to {g.group}, not {group}")
    for i, g in enumerate(entries):
        if g.is_identity:
            raise ContainsIdentity(f"entry {i} is the identity")
    total = group.identity
    for g in entries:
        total = total + g
    if not total.is_identity:
        raise ProductNotIdentity(f"entries sum to {total.coords}, not to the identity")
    if len(_closure(group, entries)) != group.order:
        raise DoesNotGenerate(f"entries do not generate {group}")
    if len(entries) < 3:
        raise TooShort(f"a spherical system needs at least 3 entries, got {len(entries)}")


def validate_system(group: AbelianGroup, entries: Sequence[GroupElement]) -> SphericalSystem:
    """Return the spherical system or raise the subclass of ``InvalidSystem`` naming the defect.

    Checks run in the order: identity entries, product, generation, length.
    """
    return SphericalSystem(group, tuple(entries))


def sigma_set(system: SphericalSystem) -> frozenset[GroupElement]:
    """Union of the ``<a_i>``: the elements having fixed points on the cover."""
    out: set[GroupElement] = set()
    for stab in set(system.stabilizers):
        out |= stab
    return frozenset(out)


def is_disjoint(a: SphericalSystem, b: SphericalSystem) -> bool:
    """True iff the diagonal action on ``C x D`` is free."""
    if a.group != b.group:
        raise StructuralError("systems over different groups")
    return sigma_set(a) & sigma_set(b) == {a.group.identity}


def genus(system: SphericalSystem) -> CoverData:
    n = system.group.order
    # 2g - 2 = |G| (r - 2) - sum |G| / m_i
    twice = n * (system.length - 2) - sum(n // m for m in system.branch_orders)
    assert twice % 2 == 0, "Riemann-Hurwitz gave an odd value of 2g - 2"
    g = twice // 2 + 1
    return CoverData(genus=g, branch_orders=system.branch_orders, total_space_euler=2 - 2 * g)


def fixed_count(system: SphericalSystem, g: GroupElement) -> int:
    """Number of points of the cover fixed by ``g != 1``.

    Each branch index ``i`` with ``g`` in ``<a_i>`` contributes its fiber of
    ``|G| / m_i`` points.
    """
    if g.is_identity:
        raise IdentityElement("the identity fixes the whole curve; use the Euler number")
    n = system.group.order
    return sum(n // m for stab, m in zip(system.stabilizers, system.branch_orders) if g in stab)


def eigenspace_dim(system: SphericalSystem, chi: Character, base_genus: int = 0) -> int:
    """Dimension of the ``chi``-eigenspace of ``H^1(C, C)``.

    For ``chi != 1`` this is ``2h - 2 + r - #{i : chi(a_i) = 1}`` where ``h`` is
    the genus of the quotient; for the trivial character it is ``2h``.
    Spherical systems always have ``h = 0``; other values are accepted but
    not exercised by any reference data.
    """
    if chi.group != system.group:
        raise StructuralError("character and system live on different groups")
    if chi.is_trivial:
        return 2 * base_genus
    fixed = sum(count for g, count in system.multiplicities.items() if chi.is_trivial_on(g))
    return 2 * base_genus - 2 + system.length - fixed


def eigenspace_profile(system: SphericalSystem) -> dict[Character, int]:
    return {chi: eigenspace_dim(system, chi) for chi in system.group.character_group}
