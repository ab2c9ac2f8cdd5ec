"""Command-line interface.

Subcommands: ``compute``, ``decompose``, ``check`` and ``paper-tables``.
Results go to stdout as JSON (or TSV with ``--format tsv``). Exit status is
0 on success, 1 for bad data (with a JSON error object on stdout) and 2 for
bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms
from .errors import MobilityError
from .io import format_number, read_profile_csv, parse_groups_csv
from .measures import MEASURE_IDS, ROSTER, MeasureSpec, decompose, evaluate
from .class2 import check_gamma
from .tables import run_paper_tables
from .decomposition import _num


def _gamma_arg(text):
    try:
        return check_gamma(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _measure_arg(text):
    try:
        MeasureSpec(text)
    except MobilityError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _spec_options(sp, measure_required=True):
    sp.add_argument("--measure", type=_measure_arg, required=measure_required,
                    help="one of: " + ", ".join(MEASURE_IDS))
    sp.add_argument("--alpha", type=float, help="sensitivity parameter")
    sp.add_argument("--gamma", type=_gamma_arg, help="class-2 exponent: 0 or odd")
    sp.add_argument("--c", type=float, help="status shift for 'intermediate'")
    sp.add_argument("--status", choices=["identity", "log", "rank"], default="identity")
    sp.add_argument("--pmode", choices=["status", "distance"], default="distance")
    sp.add_argument("--var", choices=["n", "n-1"], default="n", help="variance denominator for T1")
    sp.add_argument("--inequality", choices=["theil", "gini"], default="theil",
                    help="inequality index for 'shorrocks'")


def _output_options(sp):
    sp.add_argument("--format", choices=["json", "tsv"], default="json")
    sp.add_argument("--decimals", type=int, default=3, help="digits in TSV output")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mobility", description="Mobility indices for two-period status data.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", help="evaluate one index on a profile CSV (id,u,v)")
    sp.add_argument("--input", required=True)
    _spec_options(sp)
    _output_options(sp)

    sp = sub.add_parser("decompose", help="decompose one index on a profile CSV")
    sp.add_argument("--input", required=True)
    sp.add_argument("--method", choices=["updown", "seg", "subgroup"], default="updown")
    sp.add_argument("--groups", help="CSV with header id,group (for --method subgroup)")
    _spec_options(sp)
    _output_options(sp)

    sp = sub.add_parser("check", help="audit indices against the mobility principles")
    sp.add_argument("--all", action="store_true", help="audit the standard 16-index roster")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=300)
    _spec_options(sp, measure_required=False)
    _output_options(sp)

    sp = sub.add_parser("paper-tables", help="evaluate the built-in worked examples")
    sp.add_argument("--table", type=int, choices=[1, 2, 4], action="append",
                    help="repeatable; default is all three")
    _output_options(sp)
    return ap


def _spec(args) -> MeasureSpec:
    kw = dict(
        status=args.status,
        p_mode=args.pmode,
        variance="sample" if args.var == "n-1" else "population",
        inequality=args.inequality,
    )
    if args.alpha is not None:
        kw["alpha"] = args.alpha
    if args.gamma is not None:
        kw["gamma"] = args.gamma
    if args.c is not None:
        kw["c"] = args.c
    return MeasureSpec(args.measure, **kw)


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _read(path):
    with open(path, encoding="utf-8", newline="") as fh:
        return read_profile_csv(fh.read())


def _compute(args, out):
    spec = _spec(args)
    _, prof = _read(args.input)
    value = evaluate(spec, prof)
    if args.format == "tsv":
        out.write(f"measure\tvalue\n{spec.label}\t{format_number(value, args.decimals)}\n")
    else:
        _emit({"measure": spec.id, "params": spec.params(), "value": _num(value)}, out)


def _decompose(args, out):
    spec = _spec(args)
    ids, prof = _read(args.input)
    groups = None
    if args.method == "subgroup":
        if not args.groups:
            raise MobilityError("--method subgroup needs --groups")
        groups = parse_groups_csv(args.groups, ids)
    res = decompose(spec, prof, args.method, groups)
    if args.format == "tsv":
        lines = ["component\tweight\tvalue"]
        for k, c in res.components.items():
            lines.append(f"{k}\t{format_number(c.weight, args.decimals)}\t{format_number(c.value, args.decimals)}")
        lines.append(f"between\t\t{format_number(res.between, args.decimals)}")
        lines.append(f"total\t\t{format_number(res.total, args.decimals)}")
        lines.append(f"residual\t\t{res.residual:.3e}")
        out.write("\n".join(lines) + "\n")
    else:
        _emit({"measure": spec.id, "params": spec.params(), **res.to_dict()}, out)


def _check(args, out):
    if args.all:
        specs = list(ROSTER)
    elif args.measure:
        specs = [_spec(args)]
    else:
        raise MobilityError("check needs --measure or --all")
    rep = axioms.property_report(specs, trials=args.trials, seed=args.seed)
    if args.format == "tsv":
        lines = ["measure\t" + "\t".join(axioms.COLUMNS)]
        for lab, cells in rep.matrix().items():
            lines.append(lab + "\t" + "\t".join(c or "-" for c in cells))
        out.write("\n".join(lines) + "\n")
    else:
        _emit({"seed": args.seed, "trials": args.trials, **rep.to_dict()}, out)


def _paper_tables(args, out):
    which = args.table or [1, 2, 4]
    tables = [run_paper_tables(w) for w in which]
    if args.format == "tsv":
        out.write("\n".join(t.to_tsv(args.decimals) for t in tables))
    else:
        _emit({f"table{w}": t.to_json(args.decimals) for w, t in zip(which, tables)}, out)


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    handler = {"compute": _compute, "decompose": _decompose, "check": _check,
               "paper-tables": _paper_tables}[args.command]
    try:
        handler(args, out)
    except MobilityError as exc:
        err = {"error": getattr(exc, "code", "mobility_error"), "message": str(exc)}
        if hasattr(exc, "line"):
            err["line"] = exc.line
        _emit(err, out)
        return 1
    except OSError as exc:
        _emit({"error": "io_error", "message": str(exc)}, out)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
