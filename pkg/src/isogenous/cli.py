"""Command-line front end.

Exit codes: 0 on success, 1 for invalid mathematical input (bad spherical
system, non-free action, ...), 2 for unreadable or malformed input.
Results go to stdout, diagnostics to stderr.

CSV column orders::

    validate     field,value
    invariants   chi,k_squared,euler,q,p_g,b2,genus_c,genus_d
    autq         character,dim_c,dim_d,product,mixing
    lefschetz    field,value
    family       same as invariants
    search       index,length,genus,system        (systems)
                 index,genus_c,genus_d,chi,system_c,system_d   (pairs)
    classify     group,found,genus_c,genus_d,system_c,system_d
    ledger       label,<unknowns in table order>
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .abelian import AbelianGroup
from .description import DescriptionError, dump_description, load_description
from .exceptions import ChiOutOfRange, InvalidSurface, InvalidSystem, StructuralError, UnknownFamily
from .ledger import solve_g3, solve_g3z4, solve_g5
from .lefschetz import fixed_locus, lefschetz_number
from .search import SearchConstraints, classify_pgq0, enumerate_systems, find_disjoint_pairs
from .spherical import genus, is_disjoint, validate_system
from .surface import FAMILIES, build_surface, family, h2_table, invariants, numerically_trivial_subgroup

__all__ = ["main", "run"]

DOMAIN_ERRORS = (InvalidSystem, InvalidSurface, StructuralError, UnknownFamily, ChiOutOfRange)


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


class Output:
    """A result with a JSON form and a CSV form."""

    def __init__(self, payload, header=None, rows=None, code=0):
        self.payload = payload
        self.header = header
        self.rows = rows
        self.code = code

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2) + "\n"
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buf.getvalue()


def _coords(elems) -> list[list[int]]:
    return [list(g.coords) for g in elems]


def _flat(elems) -> str:
    return " ".join("(" + ",".join(map(str, g.coords)) + ")" for g in elems)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _surface_from(path: str):
    desc = load_description(path)
    a = validate_system(desc.group, desc.system_c)
    b = validate_system(desc.group, desc.system_d)
    return build_surface(desc.group, a, b)


def _invariants_payload(S) -> Output:
    inv = invariants(S).as_dict()
    payload = {
        "group": list(S.group.orders),
        "genus_c": S.cover_c.genus,
        "genus_d": S.cover_d.genus,
        "invariants": inv,
    }
    row = [inv[k] for k in ("chi", "k_squared", "euler", "q", "p_g", "b2")] + [S.cover_c.genus, S.cover_d.genus]
    return Output(payload, ["chi", "k_squared", "euler", "q", "p_g", "b2", "genus_c", "genus_d"], [row])


def cmd_validate(args) -> Output:
    desc = load_description(args.file)
    report: dict = {"group": list(desc.group.orders)}
    systems = {}
    for name, entries in (("system_c", desc.system_c), ("system_d", desc.system_d)):
        try:
            systems[name] = validate_system(desc.group, entries)
        except InvalidSystem as exc:
            report[name] = {"valid": False, "error": type(exc).__name__, "message": str(exc)}
        else:
            cover = genus(systems[name])
            report[name] = {
                "valid": True,
                "length": len(entries),
                "branch_orders": list(cover.branch_orders),
                "genus": cover.genus,
            }
    ok = len(systems) == 2
    if ok:
        disjoint = is_disjoint(systems["system_c"], systems["system_d"])
        report["disjoint"] = disjoint
        small = [n for n, s in systems.items() if report[n]["genus"] < 2]
        report["genus_at_least_2"] = not small
        ok = disjoint and not small
    report["valid"] = ok
    rows = [["valid", ok]]
    for name in ("system_c", "system_d"):
        for k, v in report[name].items():
            rows.append([f"{name}.{k}", v])
    for k in ("disjoint", "genus_at_least_2"):
        if k in report:
            rows.append([k, report[k]])
    return Output(report, ["field", "value"], rows, code=0 if ok else 1)


def cmd_invariants(args) -> Output:
    return _invariants_payload(_surface_from(args.file))


def cmd_autq(args) -> Output:
    S = _surface_from(args.file)
    rep = numerically_trivial_subgroup(S)
    table = h2_table(S)
    mixing = set(table.mixing_set)
    payload = {
        "subgroup": _coords(rep.subgroup),
        "order": rep.subgroup.order,
        "cyclic_type": list(rep.subgroup.cyclic_type()),
        "is_whole_group": rep.is_whole_group,
        "bound_applies": rep.bound_applies,
        "equals_aut_q": rep.equals_aut_q,
        "mixing_characters": [list(c.exponents) for c in table.mixing_set],
    }
    rows = [
        [" ".join(map(str, r.character.exponents)), r.dim_c, r.dim_d, r.product, r.character in mixing]
        for r in table
    ]
    return Output(payload, ["character", "dim_c", "dim_d", "product", "mixing"], rows)


def cmd_lefschetz(args) -> Output:
    S = _surface_from(args.file)
    if len(args.element) != S.group.rank:
        raise _Usage(f"--element needs {S.group.rank} coordinates, got {len(args.element)}")
    g = S.group.element(args.element)
    locus = fixed_locus(S, g).as_dict()
    payload = {"element": list(g.coords), **locus, "lefschetz_number": lefschetz_number(S, g)}
    rows = [[k, " ".join(map(str, v)) if isinstance(v, list) else v] for k, v in payload.items()]
    return Output(payload, ["field", "value"], rows)


def cmd_family(args) -> Output:
    S = family(args.name, args.r)
    if args.emit:
        Path(args.emit).write_text(dump_description(S))
    return _invariants_payload(S)


def cmd_search(args) -> Output:
    group = AbelianGroup(args.group)
    cons = SearchConstraints(
        max_length=args.max_len,
        target_chi=args.chi,
        reduce_by_group_autos=args.reduce_autos,
    )
    if args.pairs:
        pairs = find_disjoint_pairs(group, cons)
        items = [
            {
                "genus_c": S.cover_c.genus,
                "genus_d": S.cover_d.genus,
                "chi": S.invariants.chi,
                "system_c": _coords(S.system_c),
                "system_d": _coords(S.system_d),
            }
            for S in pairs
        ]
        rows = [
            [i, S.cover_c.genus, S.cover_d.genus, S.invariants.chi, _flat(S.system_c), _flat(S.system_d)]
            for i, S in enumerate(pairs)
        ]
        payload = {"group": list(group.orders), "count": len(items), "pairs": items}
        return Output(payload, ["index", "genus_c", "genus_d", "chi", "system_c", "system_d"], rows)
    systems = list(enumerate_systems(group, cons))
    items = [{"genus": genus(s).genus, "system": s.coords()} for s in systems]
    rows = [[i, len(s), genus(s).genus, _flat(s)] for i, s in enumerate(systems)]
    payload = {"group": list(group.orders), "count": len(items), "systems": items}
    return Output(payload, ["index", "length", "genus", "system"], rows)


def cmd_classify(args) -> Output:
    res = classify_pgq0(args.max_order, jobs=args.jobs)
    witnesses = []
    rows = []
    for G in res.groups_searched:
        S = res.witnesses.get(G)
        if S is None:
            rows.append([" ".join(map(str, G.orders)) or "1", False, "", "", "", ""])
            continue
        witnesses.append(
            {
                "group": list(G.orders),
                "genus_c": S.cover_c.genus,
                "genus_d": S.cover_d.genus,
                "system_c": _coords(S.system_c),
                "system_d": _coords(S.system_d),
            }
        )
        rows.append([" ".join(map(str, G.orders)), True, S.cover_c.genus, S.cover_d.genus,
                     _flat(S.system_c), _flat(S.system_d)])
    payload = {
        "max_order": args.max_order,
        "groups_searched": len(res.groups_searched),
        "groups_found": [list(G.orders) for G in res.groups_found],
        "witnesses": witnesses,
    }
    return Output(payload, ["group", "found", "genus_c", "genus_d", "system_c", "system_d"], rows)


def cmd_ledger(args) -> Output:
    if args.case in ("g3", "g5"):
        if args.eb is None:
            raise _Usage(f"--case {args.case} needs --eb 0|2")
        sols = solve_g3(args.eb) if args.case == "g3" else solve_g5(args.eb)
    else:
        if args.chi is None:
            raise _Usage("--case g3z4 needs --chi N")
        sols = solve_g3z4(args.chi, jobs=args.jobs)
    labels = sols.labels or [""] * len(sols)
    payload = {
        "case": args.case,
        "parameters": sols.parameters,
        "free_variables": list(sols.free_variables),
        "count": len(sols),
        "solutions": [
            {"label": lab, "values": s} if sols.labels else {"values": s}
            for lab, s in zip(labels, sols.solutions)
        ],
    }
    rows = [[lab] + [s[v] for v in sols.unknowns] for lab, s in zip(labels, sols.solutions)]
    return Output(payload, ["label", *sols.unknowns], rows)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    p = _Parser(prog="isogenous", description="Surfaces isogenous to a product with abelian group.")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (
        ("validate", "check a description file"),
        ("invariants", "numerical invariants of the surface"),
        ("autq", "translations acting trivially on cohomology"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")

    sp = sub.add_parser("lefschetz", parents=[common], help="fixed locus and Lefschetz number of one translation")
    sp.add_argument("file")
    sp.add_argument("--element", type=_int_list, required=True, help="coordinates c1,c2,...")

    sp = sub.add_parser("family", parents=[common], help="members of the (Z/2)^3 and (Z/2)^4 families")
    sp.add_argument("--name", choices=sorted(FAMILIES), required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--emit", metavar="FILE")

    sp = sub.add_parser("search", parents=[common], help="enumerate spherical systems or disjoint pairs")
    sp.add_argument("--group", type=_int_list, required=True, help="cyclic orders d1,d2,...")
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--chi", type=int)
    sp.add_argument("--reduce-autos", action="store_true")
    sp.add_argument("--pairs", action="store_true", help="list disjoint pairs instead of systems")

    sp = sub.add_parser("classify", parents=[common], help="abelian groups with p_g = q = 0 examples")
    sp.add_argument("--max-order", type=int, required=True)

    sp = sub.add_parser("ledger", parents=[common], help="solve a singular-fiber ledger")
    sp.add_argument("--case", choices=("g3", "g5", "g3z4"), required=True)
    sp.add_argument("--eb", type=int, choices=(0, 2))
    sp.add_argument("--chi", type=int)
    return p


COMMANDS = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "autq": cmd_autq,
    "lefschetz": cmd_lefschetz,
    "family": cmd_family,
    "search": cmd_search,
    "classify": cmd_classify,
    "ledger": cmd_ledger,
}


def _error(kind: str, exc: Exception, stderr) -> None:
    stderr.write(json.dumps({"error": kind, "message": str(exc)}) + "\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise _Usage("--jobs must be >= 1")
        out = COMMANDS[args.command](args)
    except _Usage as exc:
        _error("UsageError", exc, stderr)
        return 2
    except DescriptionError as exc:
        _error("ParseError", exc, stderr)
        return 2
    except OSError as exc:
        _error("IOError", exc, stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        _error(type(exc).__name__, exc, stderr)
        return 1
    except ValueError as exc:
        _error("DomainError", exc, stderr)
        return 1
    stdout.write(out.render(args.format))
    return out.code


def main(argv: Sequence[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
