"""Command-line front end: ``zzk eval | table | identities | fetch``.

Exit codes: 0 ok, 1 usage or domain error, 2 pole at the requested point,
3 tolerance failure in a table or identity report.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence, Union

from . import closedforms as cf
from .evaluate import EVAL_METHODS, FUNCTIONS, Evaluator, table2_cells
from .results import EvalResult, PoleError, ZzkError
from .zeros import PRESETS, default_zeros, fetch_zeros, load_zeros

EXIT_OK, EXIT_USAGE, EXIT_POLE, EXIT_TOL = 0, 1, 2, 3
DEFAULT_TOL = 1e-6
CSV_COLUMNS = ("point", "value", "err", "method", "work")


def parse_number(text: str) -> Union[float, complex]:
    """Real or complex argument; accepts '0.2+0.3j' and '0.2+0.3i'."""
    t = text.strip().replace(" ", "")
    try:
        return float(t)
    except ValueError:
        pass
    try:
        z = complex(t.replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return z.real if z.imag == 0 else z


def _fmt(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.15g}{x.imag:+.15g}i"
    return f"{x:.15g}"


def render_result(point, result: EvalResult, output: str) -> str:
    if output == "json":
        d = {"point": _json_number(point), **result.to_dict()}
        return json.dumps(d)
    if output == "csv":
        return _csv_rows([(point, result)])
    return (f"value  = {_fmt(result.value)}\nerr    = {result.err:.3g}\n"
            f"method = {result.method}\nwork   = {result.work}")


def parse_result(text: str) -> tuple:
    """Inverse of the JSON rendering: (point, EvalResult)."""
    d = json.loads(text)
    point = d.pop("point")
    if isinstance(point, dict):
        point = complex(point["re"], point["im"])
    return point, EvalResult.from_dict(d)


def _json_number(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def _csv_rows(rows) -> str:
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for point, r in rows:
        w.writerow([_fmt(point), _fmt(r.value), repr(r.err), r.method, r.work])
    return buf.getvalue().rstrip("\n")


def _evaluator(args) -> Evaluator:
    table = load_zeros(args.zeros) if args.zeros else None
    return Evaluator(table=table, K=args.K)


def cmd_eval(args) -> int:
    ev = _evaluator(args)
    try:
        res = ev.evaluate(args.function, args.sigma, v=args.v, a=args.a, x=args.x, method=args.method)
    except PoleError as exc:
        datum = exc.datum
        if args.output == "json":
            print(json.dumps({"point": _json_number(args.sigma), "pole": datum.to_dict() if datum else None}))
        else:
            print(f"pole at sigma = {_fmt(args.sigma)}: {exc}")
            if datum is not None:
                kind = "simple" if datum.order == 1 else "double"
                print(f"polar datum: {kind} pole, lead = {_fmt(datum.lead)}, residue = {_fmt(datum.residue)}")
        return EXIT_POLE
    print(render_result(args.sigma, res, args.output))
    tol = DEFAULT_TOL if args.tol is None else args.tol
    if res.err > tol:
        print(f"warning: error estimate {res.err:.3g} exceeds tolerance {tol:.3g}", file=sys.stderr)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.which == "table1":
        cells = cf.table1_cells()
        rows = [(c.row, c.column, _fmt(float(c.reduced)), _fmt(float(c.general)), c.diff, c.passed) for c in cells]
        header = ("row", "column", "reduced", "general", "diff", "pass")
    else:
        try:
            table = load_zeros(args.zeros) if args.zeros else default_zeros(allow_bundled=False)
        except FileNotFoundError as exc:
            print(f"error: {exc}", file=sys.stderr)
            print("hint: run `zzk fetch --preset odlyzko-100k`, set ZZK_ZEROS, or pass --zeros FILE", file=sys.stderr)
            return EXIT_USAGE
        cells = table2_cells(Evaluator(table=table, K=args.K))
        rows = [(c.row, c.column, c.printed, _fmt(float(c.result.value)), c.diff, c.passed) for c in cells]
        header = ("row", "column", "printed", "computed", "diff", "pass")
    _print_report(header, rows, args.output)
    failed = sum(1 for r in rows if not r[-1])
    if args.output == "plain":
        print(f"{len(rows) - failed}/{len(rows)} cells pass")
    return EXIT_TOL if failed else EXIT_OK


def cmd_identities(args) -> int:
    checks = cf.identity_suite(only=args.only)
    if not checks:
        print(f"error: no identity matches {args.only!r}; groups: {', '.join(cf.IDENTITY_GROUPS)}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for c in checks:
        tol = c.tol if args.tol is None else args.tol
        rows.append((c.name, _fmt(c.lhs), _fmt(c.rhs), c.scaled_diff, tol, c.scaled_diff < tol))
    _print_report(("identity", "lhs", "rhs", "diff", "tol", "pass"), rows, args.output)
    failed = sum(1 for r in rows if not r[-1])
    return EXIT_TOL if failed else EXIT_OK


def cmd_fetch(args) -> int:
    url = args.url or PRESETS[args.preset]
    table = fetch_zeros(url, expected_sha256=args.sha256, dest=args.dest)
    print(f"{table.count} zeros cached (largest ordinate {table.tau_max:.9f})")
    return EXIT_OK


def _print_report(header, rows, output: str) -> None:
    if output == "json":
        print(json.dumps([dict(zip(header, r)) for r in rows]))
        return
    if output == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    cells = [[str(h) for h in header]] + [
        [f"{x:.2e}" if isinstance(x, float) else ("ok" if x is True else "FAIL" if x is False else str(x)) for x in r]
        for r in rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    for row in cells:
        print("  ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--zeros", help="zeros file (default: $ZZK_ZEROS, cached 100k table, bundled 2k)")
    common.add_argument("--K", type=int, help="number of zeros to use in direct sums")
    common.add_argument("--tol", type=float, help=f"absolute tolerance (default {DEFAULT_TOL:g} for eval)")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="output", action="store_const", const="json")
    out.add_argument("--csv", dest="output", action="store_const", const="csv")
    common.set_defaults(output="plain")

    p = argparse.ArgumentParser(prog="zzk", description="Secondary zeta functions over the Riemann zeros.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="evaluate a function at one point")
    e.add_argument("--function", choices=FUNCTIONS, default="Zcal")
    e.add_argument("--sigma", "--s", dest="sigma", type=parse_number, required=True,
                   help="sigma (or s for Xi-hurwitz); complex as 0.2+0.3i")
    e.add_argument("--v", type=float, help="shift v of Zv")
    e.add_argument("--a", type=parse_number, help="shift a of Hz")
    e.add_argument("--x", type=parse_number, help="argument x of Xi-hurwitz")
    e.add_argument("--method", choices=EVAL_METHODS, default="auto")
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("table", parents=[common], help="recompute a summary table")
    t.add_argument("which", choices=("table1", "table2"))
    t.set_defaults(func=cmd_table)

    i = sub.add_parser("identities", parents=[common], help="run the identity checks")
    i.add_argument("--only", help="keep checks whose name starts with this prefix")
    i.set_defaults(func=cmd_identities)

    f = sub.add_parser("fetch", help="download and cache a zeros table")
    src = f.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(PRESETS))
    src.add_argument("--url")
    f.add_argument("--sha256", help="expected SHA-256 digest of the download")
    f.add_argument("--dest", help="destination file (default: cache directory)")
    f.set_defaults(func=cmd_fetch)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ZzkError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
