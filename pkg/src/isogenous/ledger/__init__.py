"""Singular-fiber ledgers and their nonnegative integer solutions."""

from .solver import Equation, LedgerSystem, SolutionSet
from .systems import (
    G3_UNKNOWNS,
    G5_UNKNOWNS,
    Z4_UNKNOWNS,
    FiberTypeTable,
    g3_system,
    g3z4_system,
    g5_system,
    load_tables,
    sign_identities,
    solve_g3,
    solve_g3z4,
    solve_g5,
    z4_parameters,
)

__all__ = [
    "Equation",
    "LedgerSystem",
    "SolutionSet",
    "FiberTypeTable",
    "load_tables",
    "g3_system",
    "g5_system",
    "g3z4_system",
    "solve_g3",
    "solve_g5",
    "solve_g3z4",
    "sign_identities",
    "z4_parameters",
    "G3_UNKNOWNS",
    "G5_UNKNOWNS",
    "Z4_UNKNOWNS",
]
