"""Bounded enumeration of nonnegative integer solutions of small linear systems.

Every equality has nonnegative integer coefficients, so each variable that
occurs in one is bounded by ``rhs // coef``; the bound used is the minimum
over all equalities.  Variables occurring in no relation at all are reported
as free and left out of the enumeration.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Iterator, Mapping

from ..exceptions import UnboundedSystem

__all__ = ["Equation", "LedgerSystem", "SolutionSet"]


@dataclass(frozen=True)
class Equation:
    """``sum coef * var  (== | >=)  rhs``."""

    name: str
    coefficients: Mapping[str, int]
    rhs: int
    relation: str = "=="

    def __post_init__(self):
        if self.relation not in ("==", ">="):
            raise ValueError(f"unsupported relation {self.relation!r}")
        coeffs = {k: int(v) for k, v in self.coefficients.items() if v}
        if any(v < 0 for v in coeffs.values()):
            raise ValueError(f"{self.name}: coefficients must be nonnegative")
        object.__setattr__(self, "coefficients", coeffs)

    def lhs(self, assignment: Mapping[str, int]) -> int:
        return sum(c * assignment.get(v, 0) for v, c in self.coefficients.items())

    def holds(self, assignment: Mapping[str, int]) -> bool:
        value = self.lhs(assignment)
        return value == self.rhs if self.relation == "==" else value >= self.rhs


@dataclass
class SolutionSet:
    unknowns: tuple[str, ...]
    solutions: list[dict[str, int]]
    free_variables: tuple[str, ...] = ()
    parameters: dict[str, int] = field(default_factory=dict)
    labels: list[str] | None = None

    def __len__(self):
        return len(self.solutions)

    def __iter__(self) -> Iterator[dict[str, int]]:
        return iter(self.solutions)

    def as_tuples(self) -> set[tuple[int, ...]]:
        return {tuple(s[v] for v in self.unknowns) for s in self.solutions}

    def nonzero(self) -> list[dict[str, int]]:
        return [{k: v for k, v in s.items() if v} for s in self.solutions]

    def grouped(self) -> dict[str, list[dict[str, int]]]:
        out: dict[str, list[dict[str, int]]] = {}
        labels = self.labels or ["all"] * len(self.solutions)
        for label, s in zip(labels, self.solutions):
            out.setdefault(label, []).append(s)
        return out


@dataclass(frozen=True)
class LedgerSystem:
    unknowns: tuple[str, ...]
    equations: tuple[Equation, ...]
    parameters: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.unknowns)
        for eq in self.equations:
            extra = set(eq.coefficients) - known
            if extra:
                raise ValueError(f"{eq.name} uses undeclared unknowns {sorted(extra)}")

    @property
    def equalities(self) -> tuple[Equation, ...]:
        return tuple(e for e in self.equations if e.relation == "==")

    @property
    def free_variables(self) -> tuple[str, ...]:
        used = {v for e in self.equations for v in e.coefficients}
        return tuple(v for v in self.unknowns if v not in used)

    @property
    def constrained(self) -> tuple[str, ...]:
        free = set(self.free_variables)
        return tuple(v for v in self.unknowns if v not in free)

    def bounds(self) -> dict[str, int]:
        """Upper bound per constrained unknown; -1 means no nonnegative value fits."""
        out: dict[str, int] = {}
        for v in self.constrained:
            caps = [e.rhs // e.coefficients[v] if e.rhs >= 0 else -1
                    for e in self.equalities if v in e.coefficients]
            if not caps:
                raise UnboundedSystem(f"{v} appears only in inequalities")
            out[v] = min(caps)
        return out

    def without(self, name: str) -> LedgerSystem:
        if name not in {e.name for e in self.equations}:
            raise KeyError(name)
        return replace(self, equations=tuple(e for e in self.equations if e.name != name))

    def with_rhs(self, name: str, rhs: int) -> LedgerSystem:
        if name not in {e.name for e in self.equations}:
            raise KeyError(name)
        eqs = tuple(replace(e, rhs=rhs) if e.name == name else e for e in self.equations)
        return replace(self, equations=eqs)

    def check(self, assignment: Mapping[str, int]) -> bool:
        return all(assignment.get(v, 0) >= 0 for v in self.unknowns) and all(
            e.holds(assignment) for e in self.equations
        )

    def solve(self, jobs: int = 1) -> SolutionSet:
        bounds = self.bounds()
        free = self.free_variables
        if any(b < 0 for b in bounds.values()):
            return SolutionSet(self.unknowns, [], free, dict(self.parameters))
        order = sorted(bounds, key=lambda v: (bounds[v], self.unknowns.index(v)))
        if jobs > 1 and order:
            lead = order[0]
            tasks = [(self, order, v) for v in range(bounds[lead] + 1)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(_solve_branch, tasks))
            raw = [s for chunk in chunks for s in chunk]
        else:
            raw = _enumerate(self, order, bounds, None)
        sols = [{v: (s[v] if v in s else 0) for v in self.unknowns} for s in raw]
        sols.sort(key=lambda s: tuple(s[v] for v in self.unknowns))
        return SolutionSet(self.unknowns, sols, free, dict(self.parameters))


def _solve_branch(args):
    system, order, lead_value = args
    return _enumerate(system, order, system.bounds(), lead_value)


def _enumerate(system: LedgerSystem, order: list[str], bounds: dict[str, int], lead_value):
    eqs = system.equalities
    ineqs = [e for e in system.equations if e.relation == ">="]
    n = len(order)
    coef = [[e.coefficients.get(v, 0) for v in order] for e in eqs]
    # gcd of coefficients still unassigned from position k on, per equation
    tail_gcd = [[0] * (n + 1) for _ in eqs]
    for j in range(len(eqs)):
        for k in range(n - 1, -1, -1):
            tail_gcd[j][k] = gcd(tail_gcd[j][k + 1], coef[j][k])
    rel = [[j for j in range(len(eqs)) if coef[j][k]] for k in range(n)]

    residual = [e.rhs for e in eqs]
    values = [0] * n
    out: list[dict[str, int]] = []

    def consistent(k: int) -> bool:
        # after fixing positions < k
        for j, r in enumerate(residual):
            g = tail_gcd[j][k]
            if (g == 0 and r != 0) or (g and r % g):
                return False
        return True

    def dfs(k: int):
        if k == n:
            sol = dict(zip(order, values))
            if all(e.holds(sol) for e in ineqs):
                out.append(sol)
            return
        hi = bounds[order[k]]
        for j in rel[k]:
            hi = min(hi, residual[j] // coef[j][k])
        lo = 0
        if k == 0 and lead_value is not None:
            if lead_value > hi:
                return
            lo = hi = lead_value
        for val in range(lo, hi + 1):
            values[k] = val
            for j in rel[k]:
                residual[j] -= coef[j][k] * val
            if consistent(k + 1):
                dfs(k + 1)
            for j in rel[k]:
                residual[j] += coef[j][k] * val
        values[k] = 0

    if consistent(0):
        dfs(0)
    return out
