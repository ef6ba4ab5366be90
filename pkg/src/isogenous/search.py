"""Exhaustive search for spherical systems and disjoint pairs.

Elements are handled by their index in ``G.elements`` (lexicographic
coordinate order), so sorting index tuples sorts systems by coordinates.
Systems are enumerated as non-decreasing index sequences, i.e. directly in
canonical (sorted multiset) form.

Genus bound.  With ``w(a) = |G| - |G|/ord(a)`` Riemann-Hurwitz reads
``2g - 2 = sum_i w(a_i) - 2|G|``, and every ``w(a) >= |G|/2``.  For a target
``chi(O_S) = (g(C)-1)(g(D)-1)/|G|`` with ``g(D) >= 2`` we get
``g(C) - 1 <= chi |G|``, hence ``sum_i w(a_i) <= 2|G| + 2 chi |G|`` and
``r <= 4 + 4 chi``.  For ``chi = 1`` this is ``r <= 8``.  The enumeration
prunes on the weight sum, which is never weaker than the length bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import prod
from typing import Iterator

import numpy as np

from .abelian import AbelianGroup
from .spherical import SphericalSystem
from .surface import ProductSurface, build_surface

__all__ = [
    "SearchConstraints",
    "ClassificationResult",
    "enumerate_systems",
    "find_disjoint_pairs",
    "classify_pgq0",
    "abelian_groups",
    "automorphisms",
    "max_length_for_chi",
]


@dataclass(frozen=True)
class SearchConstraints:
    max_length: int = 8
    target_chi: int | None = None
    require_disjoint_pair: bool = True
    reduce_by_group_autos: bool = False

    def __post_init__(self):
        if self.max_length < 3:
            raise ValueError(f"max_length must be >= 3, got {self.max_length}")
        if self.target_chi is not None and self.target_chi < 1:
            raise ValueError(f"target_chi must be positive, got {self.target_chi}")


@dataclass
class ClassificationResult:
    groups_found: list[AbelianGroup]
    witnesses: dict[AbelianGroup, ProductSurface]
    groups_searched: list[AbelianGroup] = field(default_factory=list)
    pair_counts: dict[AbelianGroup, int] = field(default_factory=dict)

    @property
    def orders_lists(self) -> set[tuple[int, ...]]:
        return {G.orders for G in self.groups_found}


def max_length_for_chi(chi: int) -> int:
    return 4 + 4 * chi


class _Table:
    """Index-level arithmetic for one group."""

    def __init__(self, group: AbelianGroup):
        self.group = group
        n = self.n = group.order
        coords = np.array([g.coords for g in group.elements], dtype=np.int64).reshape(n, group.rank)
        self.coords = coords
        self.radix = np.array(
            [prod(group.orders[i + 1:]) for i in range(group.rank)], dtype=np.int64
        )
        orders = np.array(group.orders, dtype=np.int64)
        add = (coords[:, None, :] + coords[None, :, :]) % orders
        self.add = (add @ self.radix).tolist() if group.rank else [[0]]
        self.neg = (((-coords) % orders) @ self.radix).tolist() if group.rank else [0]
        self.elem_order = [g.order for g in group.elements]
        self.weight = [n - n // m for m in self.elem_order]
        self.cyclic_mask = []
        for i in range(n):
            mask, x = 1, i
            while x:
                mask |= 1 << x
                x = self.add[x][i]
            self.cyclic_mask.append(mask)

    def span_size(self, idxs) -> int:
        span = {0}
        for i in set(idxs):
            if i in span:
                continue
            cyc = [j for j in range(self.n) if self.cyclic_mask[i] >> j & 1]
            span = {self.add[s][c] for s in span for c in cyc}
        return len(span)

    def sigma_mask(self, idxs) -> int:
        mask = 0
        for i in idxs:
            mask |= self.cyclic_mask[i]
        return mask

    def system(self, idxs) -> SphericalSystem:
        elems = self.group.elements
        return SphericalSystem(self.group, tuple(elems[i] for i in idxs))


@lru_cache(maxsize=64)
def _table(group: AbelianGroup) -> _Table:
    return _Table(group)


def _raw_systems(tab: _Table, max_length: int, weight_cap: int | None) -> list[tuple[int, ...]]:
    """All canonical index tuples of length 3..max_length summing to zero and generating G."""
    n, add, neg, weight = tab.n, tab.add, tab.neg, tab.weight
    cap = weight_cap if weight_cap is not None else float("inf")
    min_w = min(weight[1:]) if n > 1 else 0
    out: list[tuple[int, ...]] = []
    gen_cache: dict[frozenset, bool] = {}

    def generates(t):
        key = frozenset(t)
        ok = gen_cache.get(key)
        if ok is None:
            ok = gen_cache[key] = tab.span_size(key) == n
        return ok

    prefix: list[int] = []

    def dfs(start: int, total: int, w: int):
        k = len(prefix)
        if k >= 2:
            last = neg[total]
            if last >= start and last != 0 and w + weight[last] <= cap:
                cand = tuple(prefix) + (last,)
                if generates(cand):
                    out.append(cand)
        if k + 2 > max_length:
            return
        for x in range(start, n):
            wx = w + weight[x]
            if wx + min_w > cap:
                continue
            prefix.append(x)
            dfs(x, add[total][x], wx)
            prefix.pop()

    if n > 1:
        dfs(1, 0, 0)
    out.sort(key=lambda t: (len(t), t))
    return out


def _weight_cap(group: AbelianGroup, target_chi: int | None) -> int | None:
    if target_chi is None:
        return None
    return 2 * group.order + 2 * target_chi * group.order


def _genus_of(tab: _Table, t: tuple[int, ...]) -> int:
    return (sum(tab.weight[i] for i in t) - 2 * tab.n) // 2 + 1


@lru_cache(maxsize=32)
def automorphisms(group: AbelianGroup) -> np.ndarray:
    """All automorphisms as an ``(|Aut G|, |G|)`` array of index permutations.

    An assignment of images to the generators is an automorphism iff each
    image ``x_j`` has ``d_j x_j = 0`` and the images of ``e_1..e_j`` span a
    subgroup of order ``d_1 ... d_j`` for every ``j``.
    """
    tab = _table(group)
    n, k = tab.n, group.rank
    if k == 0:
        return np.zeros((1, 1), dtype=np.int64)
    candidates = [
        [x for x in range(n) if (d % tab.elem_order[x]) == 0] for d in group.orders
    ]
    images: list[tuple[int, ...]] = []

    def extend(chosen: list[int], span: set[int]):
        j = len(chosen)
        if j == k:
            images.append(tuple(chosen))
            return
        d = group.orders[j]
        for x in candidates[j]:
            cyc = [c for c in range(n) if tab.cyclic_mask[x] >> c & 1]
            new = {tab.add[s][c] for s in span for c in cyc}
            if len(new) == len(span) * d:
                extend(chosen + [x], new)

    extend([], {0})
    img = np.array([[tab.coords[x] for x in row] for row in images], dtype=np.int64)  # (A, k, k)
    orders = np.array(group.orders, dtype=np.int64)
    mapped = np.einsum("nk,akj->anj", tab.coords, img) % orders
    perms = mapped @ tab.radix
    return perms[np.lexsort(perms.T[::-1])]


def _orbit_reps(perms: np.ndarray, items: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Orbit minima of a sorted, Aut-stable list of canonical tuples.

    Walking the list in order, the first unseen member of each orbit is its
    minimum; its whole orbit is then marked.
    """
    seen: set[tuple[int, ...]] = set()
    reps = []
    for t in items:
        if t in seen:
            continue
        reps.append(t)
        rows = np.unique(np.sort(perms[:, list(t)], axis=1), axis=0)
        seen.update(map(tuple, rows.tolist()))
    return reps


def _mask_orbit(perms: np.ndarray, mask: int) -> set[int]:
    bits = [i for i in range(perms.shape[1]) if mask >> i & 1]
    return set(np.left_shift(1, perms[:, bits]).sum(axis=1).tolist())


def enumerate_systems(group: AbelianGroup, constraints: SearchConstraints) -> Iterator[SphericalSystem]:
    """Canonical spherical systems of length <= ``max_length``, deterministic order.

    With ``target_chi`` set, only systems whose genus is compatible with that
    value of ``chi(O_S)`` are produced (see the module docstring).  With
    ``reduce_by_group_autos`` one representative per ``Aut(G)``-orbit is kept:
    the lexicographically smallest sorted image.
    """
    tab = _table(group)
    raw = _raw_systems(tab, constraints.max_length, _weight_cap(group, constraints.target_chi))
    if constraints.target_chi is not None:
        budget = constraints.target_chi * group.order
        raw = [t for t in raw if _genus_of(tab, t) >= 2 and budget % (_genus_of(tab, t) - 1) == 0]
    if constraints.reduce_by_group_autos:
        perms = automorphisms(group)
        raw = _orbit_reps(perms, raw)
    for t in raw:
        yield tab.system(t)


def _pair_orbit(perms: np.ndarray, a: tuple[int, ...], b: tuple[int, ...]):
    """All unordered images of the pair ``(a, b)`` under simultaneous automorphisms."""
    ra = np.sort(perms[:, list(a)], axis=1).tolist()
    rb = np.sort(perms[:, list(b)], axis=1).tolist()
    out = set()
    for x, y in zip(ra, rb):
        x, y = tuple(x), tuple(y)
        out.add((x, y) if _key(x) <= _key(y) else (y, x))
    return out


def _key(t: tuple[int, ...]):
    return (len(t), t)


def find_disjoint_pairs(group: AbelianGroup, constraints: SearchConstraints) -> list[ProductSurface]:
    """All disjoint pairs with both genera >= 2, up to swapping factors.

    Pairs are reported with the smaller system (by length, then entries)
    first.  With ``reduce_by_group_autos`` pairs are further identified under
    the simultaneous action of ``Aut(G)``.
    """
    tab = _table(group)
    raw = _raw_systems(tab, constraints.max_length, _weight_cap(group, constraints.target_chi))
    genera = {t: _genus_of(tab, t) for t in raw}
    target = None if constraints.target_chi is None else constraints.target_chi * group.order
    raw = [
        t for t in raw
        if genera[t] >= 2 and (target is None or target % (genera[t] - 1) == 0)
    ]
    # disjointness only depends on the stabilizer set, so bucket by it
    by_mask: dict[int, list[tuple[int, ...]]] = {}
    for t in raw:
        by_mask.setdefault(tab.sigma_mask(t), []).append(t)
    mask_list = list(by_mask)

    def partners(a: tuple[int, ...], ma: int):
        for mb in mask_list:
            if ma & mb != 1:
                continue
            for b in by_mask[mb]:
                if target is None or (genera[a] - 1) * (genera[b] - 1) == target:
                    yield b

    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    if constraints.reduce_by_group_autos:
        perms = automorphisms(group)
        seen: set = set()
        for a in _orbit_reps(perms, raw):
            for b in partners(a, tab.sigma_mask(a)):
                pair = (a, b) if _key(a) <= _key(b) else (b, a)
                if pair in seen:
                    continue
                orbit = _pair_orbit(perms, a, b)
                seen |= orbit
                pairs.append(min(orbit, key=lambda p: (_key(p[0]), _key(p[1]))))
    else:
        # masks of a disjoint pair are distinct, so each unordered pair appears twice
        for a in raw:
            for b in partners(a, tab.sigma_mask(a)):
                if _key(a) < _key(b):
                    pairs.append((a, b))
    pairs.sort(key=lambda p: (_key(p[0]), _key(p[1])))
    return [build_surface(group, tab.system(a), tab.system(b)) for a, b in pairs]


def _first_pair(group: AbelianGroup, chi: int, max_length: int, reduce: bool):
    tab = _table(group)
    raw = _raw_systems(tab, max_length, _weight_cap(group, chi))
    target = chi * group.order
    by_genus: dict[int, dict[int, tuple[int, ...]]] = {}
    for t in raw:
        g = _genus_of(tab, t)
        if g >= 2 and target % (g - 1) == 0:
            # only the stabilizer set matters for disjointness
            by_genus.setdefault(g, {}).setdefault(tab.sigma_mask(t), t)
    if reduce:
        perms = automorphisms(group)
        # one representative per orbit of stabilizer sets
        firsts = {}
        for g, d in by_genus.items():
            seen: set[int] = set()
            firsts[g] = []
            for m, t in d.items():
                if m not in seen:
                    firsts[g].append(t)
                    seen |= _mask_orbit(perms, m)
    else:
        firsts = {g: list(d.values()) for g, d in by_genus.items()}
    for ga in sorted(by_genus):
        gb = target // (ga - 1) + 1
        if gb not in by_genus:
            continue
        for a in firsts[ga]:
            ma = tab.sigma_mask(a)
            for mb, b in by_genus[gb].items():
                if ma & mb == 1:
                    return build_surface(group, tab.system(a), tab.system(b))
    return None


def abelian_groups(order: int) -> list[AbelianGroup]:
    """Abelian groups of the given order, one per isomorphism class, as invariant factors."""
    if order == 1:
        return [AbelianGroup(())]
    factors: dict[int, int] = {}
    m, p = order, 2
    while p * p <= m:
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        factors[m] = factors.get(m, 0) + 1

    def partitions(k, largest=None):
        largest = k if largest is None else largest
        if k == 0:
            yield ()
            return
        for first in range(min(k, largest), 0, -1):
            for rest in partitions(k - first, first):
                yield (first,) + rest

    out = []
    per_prime = [[(p, part) for part in partitions(a)] for p, a in sorted(factors.items())]
    for combo in product(*per_prime):
        width = max(len(part) for _, part in combo)
        inv = [1] * width
        for p, part in combo:
            for i, e in enumerate(part):
                inv[width - 1 - i] *= p**e
        out.append(AbelianGroup(tuple(inv)))
    out.sort(key=lambda G: (len(G.orders), G.orders))
    return out


def _classify_one(args):
    group, chi, max_length, reduce, count = args
    witness = _first_pair(group, chi, max_length, reduce)
    n_pairs = None
    if count and witness is not None:
        n_pairs = len(
            find_disjoint_pairs(
                group,
                SearchConstraints(max_length=max_length, target_chi=chi, reduce_by_group_autos=reduce),
            )
        )
    return group, witness, n_pairs


def classify_pgq0(
    max_order: int,
    *,
    reduce_by_group_autos: bool = True,
    max_length: int | None = None,
    count_pairs: bool = False,
    jobs: int = 1,
) -> ClassificationResult:
    """Abelian groups of order <= ``max_order`` admitting a disjoint pair with ``chi(O_S) = 1``.

    Those are the groups of surfaces isogenous to a product with
    ``p_g = q = 0`` (unmixed type).  The length bound defaults to the proven
    ``r <= 8``.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    max_length = max_length_for_chi(1) if max_length is None else max_length
    groups = [G for n in range(1, max_order + 1) for G in abelian_groups(n)]
    tasks = [(G, 1, max_length, reduce_by_group_autos, count_pairs) for G in groups]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_one, tasks))
    else:
        results = [_classify_one(t) for t in tasks]
    found = [G for G, w, _ in results if w is not None]
    return ClassificationResult(
        groups_found=found,
        witnesses={G: w for G, w, _ in results if w is not None},
        groups_searched=groups,
        pair_counts={G: c for G, _, c in results if c is not None},
    )
