"""Command line front end: ``sqdist analyze | verify | extremal | sweep``.

Exit codes: 0 success, 1 usage or I/O error, 2 a verification check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import checks
from . import spectral as sp
from ._pool import pool_map
from .errors import SqdistError
from .graph import parse_shape
from .report import CSV_COLUMNS, analysis_report, extremal_text, render_text, sweep_row

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _precision(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid precision {text!r}") from None
    if value <= 0:
        raise UsageError("precision must be positive")
    return value


def _shape(text: str):
    try:
        shape = parse_shape(text)
    except SqdistError as exc:
        raise UsageError(f"invalid shape {text!r}: {exc}") from None
    if shape.n < checks.MIN_VERTICES:
        raise UsageError(f"{shape} has fewer than {checks.MIN_VERTICES} vertices")
    return shape


def _max_n(value: int) -> int:
    if value < checks.MIN_VERTICES:
        raise UsageError(f"--max-n must be at least {checks.MIN_VERTICES} (no valid shapes)")
    return value


def cmd_analyze(args, out) -> int:
    shape = _shape(args.shape)
    rep = analysis_report(shape, _precision(args.precision))
    if args.format == "json":
        out.write(json.dumps(rep) + "\n")
    else:
        out.write(render_text(rep) + "\n")
    return EXIT_OK if all(v == "pass" for v in rep["checks"].values()) else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if (args.shape is None) == (args.max_n is None):
        raise UsageError("give exactly one of --max-n N or a shape")
    if args.shape is not None:
        results = checks.run_shape_checks(_shape(args.shape))
        for name, ok in results.items():
            out.write(f"{name}: {'pass' if ok else 'fail'}\n")
        ok = all(results.values())
    else:
        max_n = _max_n(args.max_n)
        shapes = checks.sweep_shapes(max_n)
        families = [(n, b) for n in range(checks.MIN_VERTICES, max_n + 1) for b in range(2, n)]
        with pool_map() as pmap:
            results = list(pmap(checks.run_shape_checks, shapes))
            family = list(pmap(checks.family_check, *zip(*families))) if families else []
        table = checks.tally(results)
        table["extremal_shapes"] = (sum(family), len(family))
        width = max(map(len, table))
        out.write(f"shapes: {len(shapes)}\n")
        for name, (passed, total) in table.items():
            status = "pass" if passed == total else "FAIL"
            out.write(f"{name:<{width}}  {passed:>5}/{total:<5}  {status}\n")
        ok = all(p == t for p, t in table.values())
    out.write("all checks passed\n" if ok else "verification FAILED\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_extremal(args, out) -> int:
    if args.b < 2 or args.n < args.b + 1:
        raise UsageError(f"need n >= b + 1 >= 3, got n={args.n}, b={args.b}")
    with pool_map() as pmap:
        rep = sp.extremal_report(args.n, args.b, _precision(args.precision), mapper=pmap)
    if args.format == "json":
        out.write(json.dumps(rep.to_json()) + "\n")
    else:
        out.write(extremal_text(rep) + "\n")
    return EXIT_OK if rep.matches_expected else EXIT_FAIL


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, list):
        return ",".join(map(str, v))
    return v


def cmd_sweep(args, out) -> int:
    shapes = checks.sweep_shapes(_max_n(args.max_n))
    with pool_map() as pmap:
        rows = list(pmap(sweep_row, shapes))
    buf = io.StringIO(newline="")
    if args.format == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_csv_value(row[c]) for c in CSV_COLUMNS])
    else:
        for row in rows:
            buf.write(json.dumps(row) + "\n")
    text = buf.getvalue()
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sqdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="closed forms and checks for one shape")
    p.add_argument("shape", help='block sizes, e.g. "2,1,1"')
    p.add_argument("--precision", default="1e-9", help="bracket width for rho")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("shape", nargs="?")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extremal", help="spectral radius extremes for fixed n and b")
    p.add_argument("n", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--precision", default="1e-9")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sweep", help="table of key quantities for every shape")
    p.add_argument("--max-n", type=int, dest="max_n", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"sqdist: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
