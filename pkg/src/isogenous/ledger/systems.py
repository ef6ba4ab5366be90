"""The fiber ledgers: golden tables and the linear systems built from them.

Three cases.

* ``G3``: genus-3 fibrations over ``B`` carrying three commuting involutions.
  Unknowns ``n1a .. n3`` count singular fibers by type.
* ``G5``: the genus-5 analogue, unknowns ``n1 .. n9``.  The second equation
  has denominators 3 and is stored multiplied by 3.
* ``G3Z4``: genus-3 fibrations with an order-4 automorphism.  Unknowns
  ``x1..x7`` and ``y1..y13``; the right-hand sides depend on ``chi(O_S)`` and
  on two auxiliary integers ``H^2 <= -1`` and ``hbar >= 0`` (genus of the
  quotient of the fixed curve), which are swept over a box.

In every case ``e_B`` is the Euler number of the base curve; only ``0`` and
``2`` are meaningful since the ledgers force ``g(B) <= 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..abelian import GroupElement
from ..exceptions import ChiOutOfRange, NotAnInvolution, NotNumericallyTrivial
from ..lefschetz import fixed_locus
from ..surface import ProductSurface, invariants, numerically_trivial_subgroup
from .solver import Equation, LedgerSystem, SolutionSet

__all__ = [
    "FiberTypeTable",
    "load_tables",
    "g3_system",
    "g5_system",
    "g3z4_system",
    "solve_g3",
    "solve_g5",
    "solve_g3z4",
    "sign_identities",
    "G3_UNKNOWNS",
    "G5_UNKNOWNS",
    "Z4_UNKNOWNS",
]

G3_UNKNOWNS = ("n1a", "n1b", "n2a", "n2b", "n2c", "n3")
G5_UNKNOWNS = ("n1", "n2a", "n2b", "n3", "n4", "n5a", "n5b", "n5c", "n6", "n7", "n8", "n9")
Z4_AUX = ("H2", "hbar", "k1", "k2", "k3")
Z4_X = tuple(f"x{i}" for i in range(1, 8))
Z4_Y = tuple(f"y{i}" for i in range(1, 14))
Z4_UNKNOWNS = Z4_X + Z4_Y

K1_MAX = 4


@dataclass(frozen=True)
class FiberTypeTable:
    case: str
    columns: tuple[str, ...]
    rows: dict[str, tuple]
    variables: tuple[str, ...]

    def column(self, label: str) -> dict[str, object]:
        i = self.columns.index(label)
        return {name: row[i] for name, row in self.rows.items()}


@lru_cache(maxsize=1)
def _raw() -> dict:
    text = resources.files(__package__).joinpath("fiber_tables.json").read_text()
    return json.loads(text)


def load_tables() -> dict[str, FiberTypeTable]:
    data = _raw()
    default_vars = {"G3": G3_UNKNOWNS, "G5": G5_UNKNOWNS}
    out = {}
    for case, body in data.items():
        variables = tuple(body.get("variables", default_vars.get(case, ())))
        rows = {k: tuple(v) for k, v in body["rows"].items()}
        out[case] = FiberTypeTable(case, tuple(body["columns"]), rows, variables)
    return out


def _check_e_b(e_B: int):
    if e_B not in (0, 2):
        raise ValueError(f"e_B must be 0 or 2, got {e_B}")


def _printed(case: str, e_B: int) -> tuple[Equation, ...]:
    eqs = _raw()[case]["equations"]
    return tuple(
        Equation(name, body["coefficients"], body["rhs_eB"] * e_B) for name, body in eqs.items()
    )


def g3_system(e_B: int) -> LedgerSystem:
    _check_e_b(e_B)
    return LedgerSystem(G3_UNKNOWNS, _printed("G3", e_B), {"e_B": e_B})


def g5_system(e_B: int) -> LedgerSystem:
    _check_e_b(e_B)
    return LedgerSystem(G5_UNKNOWNS, _printed("G5", e_B), {"e_B": e_B})


def solve_g3(e_B: int) -> SolutionSet:
    return g3_system(e_B).solve()


def _g5_label(s: dict[str, int]) -> str:
    support = {k for k, v in s.items() if v and k != "n5c"}
    if not support:
        return "zero"
    if support <= {"n5a", "n5b"} and 2 * s["n5a"] + s["n5b"] == 6:
        return "i"
    if support == {"n6", "n9"} and s["n6"] == 1 and s["n9"] == 3:
        return "ii"
    if support == {"n7", "n9"} and s["n7"] == 1 and s["n9"] == 3:
        return "iii"
    return "unlisted"


def solve_g5(e_B: int) -> SolutionSet:
    """All solutions, labelled by family ``i``/``ii``/``iii`` (``unlisted`` otherwise)."""
    sols = g5_system(e_B).solve()
    sols.labels = [_g5_label(s) for s in sols.solutions]
    return sols


def z4_parameters(chi: int, h2: int, hbar: int) -> dict[str, int]:
    # K^2 = 8 chi + H^2 and Noether give e(S) = 4 chi - H^2
    return {
        "H2": h2,
        "hbar": hbar,
        "k1": -2 * h2 - 2 + 2 * hbar,
        "k2": 4 * chi + 2 * h2 + 4 - 4 * hbar,
        "k3": -h2 - 2 + 2 * hbar,
        "e_S": 4 * chi - h2,
    }


def g3z4_system(chi: int, h2: int, hbar: int) -> LedgerSystem:
    tables = load_tables()
    mult, non = tables["G3Z4_multiple"], tables["G3Z4_nonmultiple"]
    p = z4_parameters(chi, h2, hbar)

    def row(name: str) -> dict[str, int]:
        out = dict(zip(mult.variables, mult.rows[name]))
        out.update(zip(non.variables, non.rows[name]))
        return out

    e_f, k1, k2, k3, r = (row(n) for n in ("e_f", "k1", "k2", "k3", "r"))
    reduced = {v: e_f[v] - k2[v] - 2 * r[v] for v in Z4_UNKNOWNS}
    eqs = (
        # sum of e_f(b) = e(S) - 4(g-1)(g(B)-1) with g = 3 over P^1
        Equation("equef", e_f, p["e_S"] + 8),
        Equation("equk1", k1, p["k1"]),
        Equation("equk2", k2, p["k2"]),
        Equation("equk3", k3, p["k3"]),
        Equation("equbarh", r, 2 * hbar + 2),
        Equation("equv", {"x2": 1, "x4": 1, "x5": 1, "x6": 1}, 4, ">="),
        # equef - equk2 - 2 equbarh; redundant, kept as a consistency check
        Equation("equef2", reduced, -3 * h2),
    )
    params = {k: p[k] for k in Z4_AUX}
    params["chi"] = chi
    return LedgerSystem(Z4_UNKNOWNS, eqs, params)


def solve_g3z4(
    chi: int,
    h2_range: tuple[int, int] = (-20, -1),
    hbar_range: tuple[int, int] = (0, 10),
    jobs: int = 1,
) -> SolutionSet:
    """Sweep ``H^2`` and ``hbar`` over the closed ranges and collect all fiber counts.

    Each solution carries ``H2, hbar, k1, k2, k3`` alongside the counts.
    Parameter pairs with ``k1 > 4`` or a negative ``k_a`` are skipped.
    """
    if chi < 3:
        raise ChiOutOfRange(f"chi(O_S) must be >= 3, got {chi}")
    lo2, hi2 = h2_range
    if hi2 > -1:
        raise ValueError("H^2 must stay <= -1")
    if hbar_range[0] < 0:
        raise ValueError("hbar must stay >= 0")
    solutions = []
    for h2 in range(lo2, hi2 + 1):
        for hbar in range(hbar_range[0], hbar_range[1] + 1):
            p = z4_parameters(chi, h2, hbar)
            if p["k1"] > K1_MAX or min(p["k1"], p["k2"], p["k3"]) < 0:
                continue
            system = g3z4_system(chi, h2, hbar)
            aux = {k: p[k] for k in Z4_AUX}
            solutions += [{**aux, **s} for s in system.solve(jobs=jobs)]
    unknowns = Z4_AUX + Z4_UNKNOWNS
    solutions.sort(key=lambda s: tuple(s[v] for v in unknowns))
    return SolutionSet(unknowns, solutions, (), {"chi": chi})


def sign_identities(surface: ProductSurface, g: GroupElement) -> bool:
    """Check ``K^2 - 8 chi`` against the total self-intersection of fixed curves of ``g_bar``.

    On a product quotient the fixed curves are fibers or disjoint translates
    of horizontal curves, each of self-intersection 0.
    """
    if g.order != 2:
        raise NotAnInvolution(f"{g.coords} has order {g.order}, not 2")
    if g not in numerically_trivial_subgroup(surface).subgroup:
        raise NotNumericallyTrivial(f"{g.coords} acts nontrivially on cohomology")
    locus = fixed_locus(surface, g)
    curves = locus.vertical_fiber_count + locus.horizontal_curve_count
    self_intersection = 0 * curves
    inv = invariants(surface)
    return inv.k_squared - 8 * inv.chi == self_intersection
