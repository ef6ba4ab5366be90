"""Surface description files.

A description file is one JSON object with exactly three fields::

    {"group": [2, 2, 2],
     "system_c": [[1, 1, 0], [1, 1, 0], [1, 0, 1], [1, 0, 1], [1, 1, 1], [1, 1, 1]],
     "system_d": [[1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 1, 1]]}

Elements are coordinate lists read positionally against ``group``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .abelian import AbelianGroup, GroupElement
from .surface import ProductSurface

__all__ = ["DescriptionError", "SurfaceDescription", "parse_description", "load_description", "dump_description"]

FIELDS = ("group", "system_c", "system_d")


class DescriptionError(ValueError):
    """Malformed description file; ``position`` locates the offending value."""

    def __init__(self, message: str, position: str = "$"):
        super().__init__(f"{position}: {message}")
        self.position = position
        self.detail = message


@dataclass(frozen=True)
class SurfaceDescription:
    group: AbelianGroup
    system_c: tuple[GroupElement, ...]
    system_d: tuple[GroupElement, ...]

    def to_json(self) -> dict:
        return {
            "group": list(self.group.orders),
            "system_c": [list(g.coords) for g in self.system_c],
            "system_d": [list(g.coords) for g in self.system_d],
        }


def _int(value, pos: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DescriptionError(f"expected an integer, got {json.dumps(value)}", pos)
    return value


def _elements(group: AbelianGroup, value, pos: str) -> tuple[GroupElement, ...]:
    if not isinstance(value, list):
        raise DescriptionError("expected a list of coordinate lists", pos)
    out = []
    for i, coords in enumerate(value):
        here = f"{pos}[{i}]"
        if not isinstance(coords, list):
            raise DescriptionError("expected a coordinate list", here)
        if len(coords) != group.rank:
            raise DescriptionError(f"expected {group.rank} coordinates, got {len(coords)}", here)
        for j, (c, d) in enumerate(zip(coords, group.orders)):
            c = _int(c, f"{here}[{j}]")
            if not 0 <= c < d:
                raise DescriptionError(f"coordinate {c} out of range for Z/{d}", f"{here}[{j}]")
        out.append(GroupElement(group, tuple(coords)))
    return tuple(out)


def parse_description(data) -> SurfaceDescription:
    """Check shape and types; group-theoretic validity is left to ``validate_system``."""
    if not isinstance(data, dict):
        raise DescriptionError("expected a JSON object")
    unknown = sorted(set(data) - set(FIELDS))
    if unknown:
        raise DescriptionError(f"unknown field {unknown[0]!r}", f"$.{unknown[0]}")
    for name in FIELDS:
        if name not in data:
            raise DescriptionError(f"missing field {name!r}")
    orders = data["group"]
    if not isinstance(orders, list) or not orders:
        raise DescriptionError("expected a nonempty list of cyclic orders", "$.group")
    for i, d in enumerate(orders):
        if _int(d, f"$.group[{i}]") < 2:
            raise DescriptionError(f"cyclic order must be >= 2, got {d}", f"$.group[{i}]")
    group = AbelianGroup(tuple(orders))
    return SurfaceDescription(
        group,
        _elements(group, data["system_c"], "$.system_c"),
        _elements(group, data["system_d"], "$.system_d"),
    )


def load_description(path: str | Path) -> SurfaceDescription:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptionError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    return parse_description(data)


def dump_description(surface: ProductSurface) -> str:
    desc = SurfaceDescription(surface.group, surface.system_c.entries, surface.system_d.entries)
    return json.dumps(desc.to_json(), indent=2) + "\n"
