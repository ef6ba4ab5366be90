"""Finite abelian groups presented as products of cyclic groups.

A group is fixed together with its presentation ``Z/d_1 x ... x Z/d_k``;
elements are coordinate vectors and characters are exponent vectors.
Character values are kept as exact rotation numbers in ``[0, 1)``:
the value of ``chi`` on ``g`` is ``exp(2 pi i * chi.rotation(g))``.

>>> G = AbelianGroup((2, 2, 2))
>>> e1, e2, e3 = G.generators
>>> combine(e1 + e2, e1 + e3).coords
(0, 1, 1)
>>> chi = Character(G, (1, 0, 1))
>>> sorted(g.coords for g in kernel(chi))
[(0, 0, 0), (0, 1, 0), (1, 0, 1), (1, 1, 1)]
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

from .exceptions import StructuralError

__all__ = [
    "AbelianGroup",
    "GroupElement",
    "Subgroup",
    "Character",
    "combine",
    "element_order",
    "subgroup_generated",
    "intersect",
    "characters",
    "kernel",
    "cyclic_type",
]


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z/d_1 x ... x Z/d_k`` with a fixed list of cyclic orders."""

    orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(d) for d in self.orders)
        if any(d < 2 for d in orders):
            raise StructuralError(f"cyclic orders must be >= 2, got {orders}")
        object.__setattr__(self, "orders", orders)

    def __repr__(self):
        return f"AbelianGroup({self.orders})"

    def __str__(self):
        if not self.orders:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.orders)

    def __len__(self):
        return self.order

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    @property
    def rank(self) -> int:
        return len(self.orders)

    @cached_property
    def order(self) -> int:
        return prod(self.orders)

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @cached_property
    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * self.rank)

    @cached_property
    def generators(self) -> tuple[GroupElement, ...]:
        """The named generators ``e_1, ..., e_k``."""
        gens = []
        for i in range(self.rank):
            coords = [0] * self.rank
            coords[i] = 1
            gens.append(GroupElement(self, tuple(coords)))
        return tuple(gens)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        """All elements in lexicographic coordinate order (identity first)."""
        return tuple(GroupElement(self, c) for c in product(*(range(d) for d in self.orders)))

    def element(self, *coords) -> GroupElement:
        """Build an element, reducing each coordinate modulo its cyclic order.

        Accepts either separate integers or a single sequence.
        """
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise StructuralError(f"expected {self.rank} coordinates for {self}, got {len(coords)}")
        return GroupElement(self, tuple(int(c) % d for c, d in zip(coords, self.orders)))

    def index(self, g: GroupElement) -> int:
        """Position of ``g`` in :attr:`elements` (mixed-radix encoding)."""
        idx = 0
        for c, d in zip(g.coords, self.orders):
            idx = idx * d + c
        return idx

    @cached_property
    def character_group(self) -> tuple[Character, ...]:
        return tuple(Character(self, e) for e in product(*(range(d) for d in self.orders)))


@dataclass(frozen=True, order=True)
class GroupElement:
    group: AbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.group.rank:
            raise StructuralError(
                f"element has {len(coords)} coordinates but {self.group} has rank {self.group.rank}"
            )
        for c, d in zip(coords, self.group.orders):
            if not 0 <= c < d:
                raise StructuralError(f"coordinate {c} out of range for Z/{d}")
        object.__setattr__(self, "coords", coords)

    def __repr__(self):
        return f"GroupElement{self.coords}"

    def __add__(self, other: GroupElement) -> GroupElement:
        return combine(self, other)

    def __neg__(self) -> GroupElement:
        return GroupElement(
            self.group, tuple((-c) % d for c, d in zip(self.coords, self.group.orders))
        )

    def __sub__(self, other: GroupElement) -> GroupElement:
        return combine(self, -other)

    def __rmul__(self, n: int) -> GroupElement:
        return GroupElement(
            self.group, tuple((n * c) % d for c, d in zip(self.coords, self.group.orders))
        )

    __mul__ = __rmul__

    @property
    def is_identity(self) -> bool:
        return not any(self.coords)

    @property
    def order(self) -> int:
        return element_order(self)

    @property
    def index(self) -> int:
        return self.group.index(self)


def combine(g: GroupElement, h: GroupElement) -> GroupElement:
    """Group law: coordinatewise sum reduced modulo each cyclic order."""
    if len(g.coords) != len(h.coords) or g.group != h.group:
        raise StructuralError(f"cannot combine elements of {g.group} and {h.group}")
    return GroupElement(g.group, tuple((a + b) % d for a, b, d in zip(g.coords, h.coords, g.group.orders)))


def element_order(g: GroupElement) -> int:
    # order of c in Z/d is d / gcd(c, d)
    return lcm(*(d // gcd(c, d) for c, d in zip(g.coords, g.group.orders))) if g.coords else 1


@dataclass(frozen=True)
class Subgroup:
    group: AbelianGroup
    generators: tuple[GroupElement, ...]
    elements: frozenset[GroupElement]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, g):
        return g in self.elements

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_whole_group(self) -> bool:
        return self.order == self.group.order

    def cyclic_type(self) -> tuple[int, ...]:
        """Invariant factors ``(n_1, ..., n_s)`` with ``n_i | n_{i+1}``."""
        return cyclic_type(self.elements)

    def same_elements(self, other: Subgroup) -> bool:
        return self.elements == other.elements


def _closure(group: AbelianGroup, gens: Iterable[GroupElement]) -> frozenset[GroupElement]:
    span = {group.identity}
    for g in gens:
        if g in span:
            continue
        # add the cyclic subgroup <g> to the current span
        multiples = [group.identity]
        x = g
        while not x.is_identity:
            multiples.append(x)
            x = x + g
        span = {s + m for s in span for m in multiples}
    return frozenset(span)


def subgroup_generated(group: AbelianGroup, gens: Sequence[GroupElement] = ()) -> Subgroup:
    """Smallest subgroup of ``group`` containing ``gens``."""
    gens = tuple(gens)
    for g in gens:
        if g.group != group:
            raise StructuralError(f"generator {g} does not belong to {group}")
    return Subgroup(group, gens, _closure(group, gens))


def intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    if a.group != b.group:
        raise StructuralError("subgroups live in different groups")
    common = a.elements & b.elements
    return Subgroup(a.group, tuple(sorted(common)), common)


@dataclass(frozen=True, order=True)
class Character:
    """Homomorphism ``G -> C^*`` given by exponents ``(k_1, ..., k_r)``.

    ``chi(g) = exp(2 pi i * sum_j k_j * g_j / d_j)``.
    """

    group: AbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != self.group.rank:
            raise StructuralError(f"character needs {self.group.rank} exponents, got {len(exps)}")
        object.__setattr__(self, "exponents", tuple(e % d for e, d in zip(exps, self.group.orders)))

    def __repr__(self):
        return f"Character{self.exponents}"

    def rotation(self, g: GroupElement) -> Fraction:
        if g.group != self.group:
            raise StructuralError(f"{g} is not an element of {self.group}")
        return Fraction(self.rotation_numerator(g), self.group.exponent)

    def rotation_numerator(self, g: GroupElement) -> int:
        """``N * rotation(g)`` with ``N`` the group exponent, an integer in ``[0, N)``."""
        n = self.group.exponent
        return sum(k * c * (n // d) for k, c, d in zip(self.exponents, g.coords, self.group.orders)) % n

    value = rotation

    def is_trivial_on(self, g: GroupElement) -> bool:
        return self.rotation_numerator(g) == 0

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    @property
    def order(self) -> int:
        return lcm(*(d // gcd(k, d) for k, d in zip(self.exponents, self.group.orders))) if self.exponents else 1

    def conjugate(self) -> Character:
        return Character(self.group, tuple(-k for k in self.exponents))

    def __mul__(self, other: Character) -> Character:
        if other.group != self.group:
            raise StructuralError("characters of different groups")
        return Character(self.group, tuple(a + b for a, b in zip(self.exponents, other.exponents)))


def characters(group: AbelianGroup) -> list[Character]:
    """All ``|G|`` characters in lexicographic exponent order, trivial first."""
    return list(group.character_group)


def kernel(chi: Character) -> Subgroup:
    elems = frozenset(g for g in chi.group.elements if chi.is_trivial_on(g))
    return Subgroup(chi.group, tuple(sorted(elems)), elems)


def _prime_factors(n: int) -> list[int]:
    primes, p = [], 2
    while p * p <= n:
        if n % p == 0:
            primes.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        primes.append(n)
    return primes


def cyclic_type(elements: Iterable[GroupElement]) -> tuple[int, ...]:
    """Invariant factors of the finite abelian group formed by ``elements``.

    For each prime ``p``, ``#{x : p^k x = 0} = p^(s_k)`` and ``s_k - s_(k-1)``
    counts the cyclic p-factors of order at least ``p^k``.
    """
    orders = Counter(element_order(g) for g in elements)
    n = sum(orders.values())
    if n <= 1:
        return ()
    divisors_by_prime: dict[int, list[int]] = {}
    for p in _prime_factors(n):
        s_prev, k, sizes = 0, 1, []
        while True:
            count = sum(c for o, c in orders.items() if (p**k) % o == 0)
            s = _log(count, p)
            if s == s_prev:
                break
            sizes.append(s - s_prev)
            s_prev, k = s, k + 1
        # sizes[k-1] = number of factors of order >= p^k
        factors = []
        for k in range(len(sizes), 0, -1):
            exact = sizes[k - 1] - (sizes[k] if k < len(sizes) else 0)
            factors += [p**k] * exact
        divisors_by_prime[p] = sorted(factors, reverse=True)
    width = max(len(v) for v in divisors_by_prime.values())
    invariants = [
        reduce(lambda a, b: a * b, (v[i] for v in divisors_by_prime.values() if i < len(v)), 1)
        for i in range(width)
    ]
    return tuple(sorted(invariants))


def _log(count: int, p: int) -> int:
    s = 0
    while count > 1:
        count //= p
        s += 1
    return s
