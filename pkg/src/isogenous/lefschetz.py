"""Fixed loci and Lefschetz numbers of translation automorphisms of ``S``.

For ``g`` in ``G`` let ``g_bar`` be the automorphism of ``S = (C x D)/G``
induced by ``(g, 1)``.  A point ``[c, d]`` is fixed iff ``(g c, d) = (h c, h d)``
for some ``h``, i.e. ``h`` stabilizes ``d`` and ``h^-1 g`` stabilizes ``c``.
Since the diagonal action is free these ``h``-strata are disjoint, giving

    e(S^g_bar) = 1/|G| * sum_h E_C(g - h) * E_D(h),

with ``E_X(1) = e(X)`` and ``E_X(k) = #X^k`` otherwise.  The stratum ``h = 1``
is a union of fibers over branch points of ``C/G``, the stratum ``h = g`` a
union of horizontal curves, all other strata are isolated points.

The Lefschetz number is computed independently from the character table:
``L = 4 + sum_chi chi(g) d_chi(C) d_conj(chi)(D)``, summed exactly in the
cyclotomic field.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from sympy import Poly, cyclotomic_poly, symbols

from .abelian import GroupElement
from .spherical import SphericalSystem, fixed_count
from .surface import ProductSurface, h2_table, invariants

__all__ = [
    "FixedLocusSummary",
    "fixed_locus",
    "lefschetz_number",
    "check_numerically_trivial_necessary",
    "cyclotomic_integer",
]

_x = symbols("x")


@dataclass(frozen=True)
class FixedLocusSummary:
    vertical_fiber_count: int
    horizontal_curve_count: int
    isolated_point_count: int
    euler_fixed: int
    vertical_fiber_genera: tuple[int, ...] = ()
    horizontal_curve_genera: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "vertical_fiber_count": self.vertical_fiber_count,
            "horizontal_curve_count": self.horizontal_curve_count,
            "isolated_point_count": self.isolated_point_count,
            "euler_fixed": self.euler_fixed,
            "vertical_fiber_genera": list(self.vertical_fiber_genera),
            "horizontal_curve_genera": list(self.horizontal_curve_genera),
        }


def _euler_or_fixed(system: SphericalSystem, euler: int, k: GroupElement) -> int:
    return euler if k.is_identity else fixed_count(system, k)


def _curve_genera(system: SphericalSystem, g: GroupElement, other_euler: int) -> tuple[int, ...]:
    # each branch index i with g in <a_i> gives the curve (other curve)/<a_i>, an etale quotient
    out = []
    for stab, m in zip(system.stabilizers, system.branch_orders):
        if g in stab:
            out.append(1 - other_euler // (2 * m))
    return tuple(out)


def fixed_locus(surface: ProductSurface, g: GroupElement) -> FixedLocusSummary:
    group = surface.group
    n = group.order
    e_c = surface.cover_c.total_space_euler
    e_d = surface.cover_d.total_space_euler
    A, B = surface.system_c, surface.system_d

    total = 0
    isolated = 0
    for h in group.elements:
        term = _euler_or_fixed(A, e_c, g - h) * _euler_or_fixed(B, e_d, h)
        total += term
        if not h.is_identity and h != g:
            isolated += term
    assert total % n == 0 and isolated % n == 0, "stratum sum not divisible by |G|"

    if g.is_identity:
        return FixedLocusSummary(0, 0, 0, total // n)
    vertical = _curve_genera(A, g, e_d)
    horizontal = _curve_genera(B, g, e_c)
    return FixedLocusSummary(
        vertical_fiber_count=len(vertical),
        horizontal_curve_count=len(horizontal),
        isolated_point_count=isolated // n,
        euler_fixed=total // n,
        vertical_fiber_genera=vertical,
        horizontal_curve_genera=horizontal,
    )


def cyclotomic_integer(coefficients: dict[int, int], n: int) -> int:
    """Evaluate ``sum_k c_k zeta_n^k`` exactly; it must be a rational integer."""
    vec = [0] * n
    for k, c in coefficients.items():
        vec[k % n] += c
    poly = Poly(list(reversed(vec)), _x, domain="ZZ")
    rem = poly.rem(Poly(cyclotomic_poly(n, _x), _x, domain="ZZ"))
    if rem.degree() > 0:
        raise ArithmeticError(f"character sum is not rational: {rem.as_expr()}")
    return int(rem.coeff_monomial(1))


def lefschetz_number(surface: ProductSurface, g: GroupElement) -> int:
    n = surface.group.exponent
    coeffs: dict[int, int] = defaultdict(int)
    for row in h2_table(surface):
        if row.product:
            rot = row.character.rotation(g)
            coeffs[int(rot * n)] += row.product
    # H^0, H^4 and the two fiber classes in H^2 are fixed
    return 4 + cyclotomic_integer(coeffs, n)


def check_numerically_trivial_necessary(surface: ProductSurface, g: GroupElement) -> bool:
    """``e(S^g) = e(S)``, necessary for ``g_bar`` to act trivially on cohomology."""
    return fixed_locus(surface, g).euler_fixed == invariants(surface).euler
