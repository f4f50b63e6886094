"""Command-line interface.

Exit status: 0 when the checked property holds, 1 when it fails (the
witness is printed), 2 on unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import constructions
from ._backend import BACKEND
from .core import (
    BckAlgebra,
    CayleyTable,
    ElementError,
    NotBCKError,
    check_axioms,
    hasse_covers,
    validate,
)
from .search import (
    DEFAULT_CEILING,
    Filter,
    SearchConfig,
    SearchLimitError,
    census,
    enumerate_algebras,
    first_nonprolongable_pair,
)
from .sequences import (
    commutativity_index,
    find_identity_violation,
    pair_sequences,
    prolongation_depth,
)
from .textio import TableFormatError, format_table, format_tables, parse_table


class InputError(Exception):
    """Unusable input; reported on one line with exit status 2."""


def emit_hasse(a: BckAlgebra) -> str:
    """DOT digraph of the order, one edge per cover, pointing upward."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    lines += [f"  {x};" for x in a.elements]
    lines += [f"  {x} -> {y};" for x, y in sorted(hasse_covers(a))]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _load_table(path: str) -> CayleyTable:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_table(text)
    except TableFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_algebra(path: str) -> BckAlgebra:
    table = _load_table(path)
    try:
        return validate(table)
    except NotBCKError as exc:
        raise InputError(f"{path}: {exc}") from None


def _element(a: BckAlgebra, value: int, name: str) -> int:
    if not 0 <= value < a.order:
        raise InputError(f"argument {name}={value} is outside 0..{a.order - 1}")
    return value


def _table_json(t: CayleyTable) -> dict:
    return {"order": t.order, "table": [list(r) for r in t.rows]}


class Report:
    def __init__(self, args):
        self.json = args.json
        self.quiet = args.quiet

    def emit(self, text: str, data) -> None:
        if self.json:
            print(json.dumps(data, indent=2))
        elif not self.quiet:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")

    def note(self, text: str) -> None:
        if not self.quiet:
            print(text, file=sys.stderr)


def cmd_verify(args, out: Report) -> int:
    table = _load_table(args.file)
    violations = check_axioms(table)
    if not violations:
        out.emit(
            f"BCK-algebra of order {table.order}",
            {"order": table.order, "bck": True, "axiom_violations": []},
        )
        return 0
    lines = [f"not a BCK-algebra (order {table.order})"]
    lines += [f"  {v}" for v in violations]
    out.emit(
        "\n".join(lines),
        {
            "order": table.order,
            "bck": False,
            "axiom_violations": [asdict(v) for v in violations],
        },
    )
    return 1


def cmd_seq(args, out: Report) -> int:
    a = _load_algebra(args.file)
    x, y = _element(a, args.x, "X"), _element(a, args.y, "Y")
    tr = pair_sequences(a, x, y)
    text = (
        f"x_terms: {' '.join(map(str, tr.x_terms))}\n"
        f"y_terms: {' '.join(map(str, tr.y_terms))}\n"
        f"preperiod: {tr.preperiod}\nperiod: {tr.period}"
    )
    out.emit(text, {"order": a.order, **tr.to_dict()})
    return 0


def cmd_depth(args, out: Report) -> int:
    a = _load_algebra(args.file)
    x, y = _element(a, args.x, "X"), _element(a, args.y, "Y")
    rep = prolongation_depth(a, x, y)
    lines = [f"pair ({x}, {y}): {rep}"]
    w = rep.witness
    if w is not None:
        lines.append(
            f"failing link {w.link} in chain ({w.chain}): "
            f"{w.b_term} = {w.b} is not <= {w.a_term} = {w.a}, "
            f"product {w.b}.{w.a} = {w.product}"
        )
        lines.append(f"printed form: {w.printed_term} = {w.printed_product}")
    out.emit("\n".join(lines), {"order": a.order, **rep.to_dict()})
    return 1 if rep.bounded else 0


def cmd_index(args, out: Report) -> int:
    a = _load_algebra(args.file)
    k = commutativity_index(a)
    out.emit(f"commutativity index: {k}", {"order": a.order, "index": k})
    return 0


def cmd_identity(args, out: Report) -> int:
    a = _load_algebra(args.file)
    if args.n < 1:
        raise InputError(f"argument N={args.n} must be at least 1")
    v = find_identity_violation(a, args.n)
    if v is None:
        out.emit(
            f"identity x_{args.n} = y_{args.n} holds",
            {"order": a.order, "n": args.n, "identity": True, "witness": None},
        )
        return 0
    out.emit(
        f"identity x_{args.n} = y_{args.n} fails at ({v.x}, {v.y}): "
        f"x_{args.n}={v.x_n}, y_{args.n}={v.y_n}",
        {"order": a.order, "n": args.n, "identity": False, "witness": asdict(v)},
    )
    return 1


def cmd_construct(args, out: Report) -> int:
    if args.kind == "extend":
        a = constructions.top_extension(_load_algebra(args.arg))
    else:
        try:
            n = int(args.arg)
        except ValueError:
            raise InputError(f"argument N={args.arg!r} is not an integer") from None
        try:
            a = constructions.CONSTRUCTIONS[args.kind](n)
        except ValueError as exc:
            raise InputError(f"argument N={n}: {exc}") from None
    out.emit(format_table(a.table), _table_json(a.table))
    return 0


def cmd_search(args, out: Report) -> int:
    try:
        flt = Filter.parse(args.filter)
    except ValueError as exc:
        raise InputError(f"argument --filter: {exc}") from None
    try:
        config = SearchConfig(
            args.n, flt, args.up_to_iso, args.limit, args.jobs, args.ceiling
        )
        outcome = enumerate_algebras(config)
    except (SearchLimitError, ValueError) as exc:
        raise InputError(str(exc)) from None
    witnesses = None
    if any(name == "nonprolongable" for name, _ in flt.clauses):
        witnesses = [
            first_nonprolongable_pair(validate(t)) for t in outcome.algebras
        ]
    records = []
    text_parts = []
    for i, t in enumerate(outcome.algebras):
        rec = _table_json(t)
        comment = f"algebra {i + 1}"
        if witnesses is not None:
            rep = witnesses[i]
            rec["witness"] = rep.to_dict()
            comment += f"; pair ({rep.x}, {rep.y}) {rep}, product {rep.witness.product}"
        records.append(rec)
        text_parts.append(format_table(t, comment=comment))
    out.emit(
        "".join(text_parts) or "# no algebras found\n",
        {
            "order": args.n,
            "filter": str(flt),
            "up_to_iso": args.up_to_iso,
            "count": len(outcome.algebras),
            "algebras": records,
            "stats": asdict(outcome.stats),
        },
    )
    out.note(f"{len(outcome.algebras)} algebra(s); {outcome.stats.summary()}; backend {BACKEND}")
    return 0 if outcome.algebras else 1


def cmd_hasse(args, out: Report) -> int:
    a = _load_algebra(args.file)
    covers = sorted(hasse_covers(a))
    out.emit(
        emit_hasse(a),
        {"order": a.order, "covers": [list(c) for c in covers]},
    )
    return 0


def cmd_census(args, out: Report) -> int:
    try:
        rows = census(args.n, worker_count=args.jobs, ceiling=args.ceiling)
    except (SearchLimitError, ValueError) as exc:
        raise InputError(str(exc)) from None
    text = "order labeled up_to_iso\n" + "".join(
        f"{r.order} {r.labeled} {r.up_to_iso}\n" for r in rows
    )
    out.emit(text, {"count": [asdict(r) for r in rows]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="structured JSON report")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="exit status only")

    parser = argparse.ArgumentParser(
        prog="bckbench", description="Finite BCK-algebra workbench", parents=[common]
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a table against the axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    for name, func, help_ in (
        ("seq", cmd_seq, "BCK-sequences from a pair"),
        ("depth", cmd_depth, "prolongation depth of the chains from a pair"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
        p.add_argument("x", type=int)
        p.add_argument("y", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("index", parents=[common], help="commutativity index")
    p.add_argument("file")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("identity", parents=[common], help="check x_N = y_N for all pairs")
    p.add_argument("file")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("construct", parents=[common], help="build a parametric algebra")
    p.add_argument("kind", choices=["chain", "lemma2", "commutative", "extend"])
    p.add_argument("arg", help="order N, or FILE for extend")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", parents=[common], help="enumerate algebras of order N")
    p.add_argument("n", type=int)
    p.add_argument("--filter", default="all",
                   help="all, nonprolongable, index=K, index<=K, identity-fails=N; comma = and")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram in DOT")
    p.add_argument("file")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("census", parents=[common], help="counts per order up to N")
    p.add_argument("n", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.json = getattr(args, "json", False)
    args.quiet = getattr(args, "quiet", False)
    try:
        return args.func(args, Report(args))
    except (InputError, ElementError) as exc:
        print(f"bckbench: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
