"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 script error, 3 an audit ran and
refuted at least one checked claim.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import audit as au
from .admissible import as_dense, enumerate_selectors
from .dsl import DslError, evaluate, format_value, value_to_json
from .errors import LogicError
from .prob_core import Proposition, to_scalar

EXIT_OK, EXIT_USAGE, EXIT_SCRIPT, EXIT_REFUTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _decimal(x: Fraction, digits: int) -> str:
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = round(x * 10**digits)
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _with_decimals(value, digits: Optional[int]) -> str:
    text = format_value(value)
    if digits is None:
        return text
    if isinstance(value, Proposition):
        return f"{text}  ~ [{', '.join(_decimal(p, digits) for p in value)}]"
    if isinstance(value, Fraction):
        return f"{text}  ~ {_decimal(value, digits)}"
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ctxlogic", description="Probabilistic logic of composite devices.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--decimal-digits", type=int, default=None,
                        help="also print decimal approximations")
    # same flags after the subcommand; SUPPRESS keeps the top-level value otherwise
    shared = _Parser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    shared.add_argument("--decimal-digits", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="run a .ctx script", parents=[shared])
    p.add_argument("file")

    p = sub.add_parser("audit", help="machine-check a claim", parents=[shared])
    p.add_argument("claim", choices=sorted(au.AUDITS))
    p.add_argument("--sample", type=int, default=32, help="two-place selectors sampled by 'classify'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid", type=int, default=8, help="grid denominator for 'nearest'")

    p = sub.add_parser("demo", help="worked demonstrations", parents=[shared])
    p.add_argument("name", choices=["context-recognition"])
    p.add_argument("--C", dest="C", required=True, help="context value, e.g. -1/4")

    p = sub.add_parser("enumerate", help="list selector matrices in lexicographic order", parents=[shared])
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    return parser


def _normalize_argv(argv: Sequence[str]) -> list[str]:
    # "--C -1/4" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for arg in it:
        if arg == "--C":
            value = next(it, None)
            out.append(arg if value is None else f"--C={value}")
        else:
            out.append(arg)
    return out


def _emit(obj, stream) -> None:
    stream.write(json.dumps(obj, indent=2) + "\n")


def _cmd_eval(args, out, err) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            source = fh.read()
    except OSError as exc:
        err.write(f"ctxlogic: cannot read {args.file}: {exc.strerror}\n")
        return EXIT_USAGE
    try:
        values = evaluate(source)
    except DslError as exc:
        err.write(f"{args.file}:{exc}\n")
        return EXIT_SCRIPT
    if args.json:
        _emit([value_to_json(v) for v in values], out)
    else:
        for v in values:
            out.write(_with_decimals(v, args.decimal_digits) + "\n")
    return EXIT_OK


def _cmd_audit(args, out, err) -> int:
    if args.claim == "classify":
        report = au.connective_dp_classification(args.sample, args.seed)
    elif args.claim == "nearest":
        report = au.nearest_product_audit(args.grid)
    else:
        report = au.AUDITS[args.claim]()
    if args.json:
        _emit(report.to_json(), out)
    else:
        out.write(report.to_text() + "\n")
    return EXIT_REFUTED if report.refuted else EXIT_OK


def _cmd_demo(args, out, err) -> int:
    try:
        record = au.context_recognition_demo(to_scalar(args.C))
    except (ValueError, LogicError) as exc:
        err.write(f"ctxlogic: {exc}\n")
        return EXIT_USAGE
    if args.json:
        _emit(record.to_json(), out)
    else:
        out.write(record.to_text() + "\n")
    return EXIT_OK


def _cmd_enumerate(args, out, err) -> int:
    if args.rows < 1 or args.cols < 1:
        err.write("ctxlogic: --rows and --cols must be positive\n")
        return EXIT_USAGE
    selectors = enumerate_selectors(args.rows, args.cols)
    for k, g in enumerate(selectors):
        if args.limit is not None and k >= args.limit:
            break
        if args.json:
            out.write(json.dumps(g.to_json(dense=True)) + "\n")
        else:
            out.write(f"{g}  dense={as_dense(g)}\n")
    return EXIT_OK


COMMANDS = {"eval": _cmd_eval, "audit": _cmd_audit, "demo": _cmd_demo, "enumerate": _cmd_enumerate}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_normalize_argv(argv))
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    return COMMANDS[args.command](args, out, err)


def main() -> None:
    sys.exit(run())
