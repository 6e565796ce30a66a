"""Command-line interface.

Subcommands:

    triangle      emit a triangle (or its ordered rows) as n,k,value records
    modes         per-n mode reports with exact Darroch certificates
    certify       Sturm real-rootedness certification of the family polynomials
    asymptotics   convergence table of exact values/modes vs. the laws
    verify        cross-validation suites (quick or full grids)

Tables are emitted as CSV (default) or JSON with identical field names.
CSV is byte-stable for identical arguments: fixed header, rows ordered by
n, integers and rationals as exact decimal strings ("p/q" for rationals),
floats with 17 significant digits. Every failure path prints a one-line
`error: ...` record to stderr and exits 2 (bad arguments) or 1 (a
verification/certification found a violation).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, asymptotics, verify
from .modes import darroch_localize
from .polynomials import certify_real_rooted_in_interval
from .triangles import (
    R_STIRLING,
    STIRLING,
    WHITNEY,
    TriangleFamily,
    build_triangle,
    ordered_row,
)

__all__ = ["main", "console_main"]

DEFAULT_GRID = (10, 25, 50, 100, 200, 400)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _family_from_args(args) -> TriangleFamily:
    if args.family == STIRLING:
        if args.r is not None or args.m is not None:
            raise _UsageError("--r/--m are not valid for --family stirling")
        return TriangleFamily(STIRLING)
    if args.family == R_STIRLING:
        if args.m is not None:
            raise _UsageError("--m is not valid for --family r-stirling")
        return TriangleFamily(R_STIRLING, 0 if args.r is None else args.r)
    if args.r is not None:
        raise _UsageError("--r is not valid for --family whitney")
    return TriangleFamily(WHITNEY, 1 if args.m is None else args.m)


def _family_polynomials(family: TriangleFamily):
    from . import polynomials

    if family.kind in (STIRLING, R_STIRLING):
        return polynomials.r_fubini_polynomials(family.param)
    return polynomials.whitney_fubini_polynomials(family.param)


# ---------------------------------------------------------------- output


def _csv_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _json_cell(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def _emit_table(rows: list[dict], fieldnames: list[str], args) -> None:
    if args.format == "json":
        payload = [{k: _json_cell(row[k]) for k in fieldnames} for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_csv_cell(row[k]) for k in fieldnames])
        text = buf.getvalue()
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)


# -------------------------------------------------------------- commands


def _cmd_triangle(args) -> int:
    family = _family_from_args(args)
    if args.n_max < 0:
        raise _UsageError("--n-max must be >= 0")
    triangle = build_triangle(family, args.n_max)
    rows = []
    for n in range(args.n_max + 1):
        values = ordered_row(triangle, n) if args.ordered else triangle.rows[n]
        for k, v in enumerate(values):
            rows.append({"n": n, "k": k, "value": v})
    _emit_table(rows, ["n", "k", "value"], args)
    return 0


def _cmd_modes(args) -> int:
    family = _family_from_args(args)
    if args.n_max < 1:
        raise _UsageError("--n-max must be >= 1")
    rows = []
    all_ok = True
    gen = _family_polynomials(family)
    next(gen)  # n = 0 is a constant; reports start at n = 1
    for n in range(1, args.n_max + 1):
        report = darroch_localize(next(gen))
        rows.append(
            {
                "n": n,
                "mode": report.mode_index,
                "plateau": report.plateau_length,
                "darroch_mean": report.darroch_mean,
                "bound_holds": report.darroch_bound_holds,
                "slc": report.slc,
            }
        )
        if not (report.slc and report.darroch_bound_holds):
            all_ok = False
    _emit_table(
        rows, ["n", "mode", "plateau", "darroch_mean", "bound_holds", "slc"], args
    )
    if not all_ok:
        print(f"error: verification-failed: SLC/Darroch violation for {family.label}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_certify(args) -> int:
    family = _family_from_args(args)
    if args.n_max < 1:
        raise _UsageError("--n-max must be >= 1")
    gen = _family_polynomials(family)
    next(gen)
    failures = 0
    for n in range(1, args.n_max + 1):
        cert = certify_real_rooted_in_interval(next(gen))
        verdict = "ok" if cert.ok else "FAIL"
        print(
            f"n={n} {verdict} all_roots_real={str(cert.all_roots_real).lower()} "
            f"zero_root_multiplicity={cert.zero_root_multiplicity} "
            f"distinct_roots_in_interval={cert.distinct_roots_in_interval} "
            f"degree={cert.degree}"
        )
        if not cert.ok:
            failures += 1
    print(f"certified {args.n_max - failures}/{args.n_max} rows for {family.label}")
    if failures:
        print(f"error: certification-failed: {failures} rows for {family.label}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_asymptotics(args) -> int:
    family = _family_from_args(args)
    try:
        grid = [int(part) for part in args.grid.split(",") if part.strip()]
    except ValueError:
        raise _UsageError(f"--grid must be comma-separated integers, got {args.grid!r}")
    table = asymptotics.convergence_table(family, grid)
    rows = [
        {
            "n": row.n,
            "exact_log": row.exact_log,
            "predicted_log": row.predicted_log,
            "value_ratio": row.value_ratio,
            "exact_mode": row.exact_mode,
            "predicted_mode": row.predicted_mode,
            "mode_ratio": row.mode_ratio,
        }
        for row in table
    ]
    _emit_table(
        rows,
        [
            "n",
            "exact_log",
            "predicted_log",
            "value_ratio",
            "exact_mode",
            "predicted_mode",
            "mode_ratio",
        ],
        args,
    )
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suites(args.depth)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name}: {status} ({result.checks} checks) {result.detail}")
    if all(r.passed for r in results):
        return 0
    failed = [r.name for r in results if not r.passed]
    print(f"error: verification-failed: {','.join(failed)}", file=sys.stderr)
    return 1


# ----------------------------------------------------------------- main


def _add_family_options(sub) -> None:
    sub.add_argument(
        "--family",
        required=True,
        choices=[STIRLING, R_STIRLING, WHITNEY],
        help="triangle family",
    )
    sub.add_argument("--r", type=int, default=None, help="r for r-stirling (default 0)")
    sub.add_argument("--m", type=int, default=None, help="m for whitney (default 1)")


def _add_output_options(sub) -> None:
    sub.add_argument("--format", choices=["csv", "json"], default="csv")
    sub.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> _Parser:
    parser = _Parser(prog="ordmode", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ordmode {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("triangle", help="emit triangle rows")
    _add_family_options(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--ordered", action="store_true", help="scale entry k by (k+shift)!")
    _add_output_options(p)
    p.set_defaults(func=_cmd_triangle)

    p = commands.add_parser("modes", help="mode reports with Darroch certificates")
    _add_family_options(p)
    p.add_argument("--n-max", type=int, required=True)
    _add_output_options(p)
    p.set_defaults(func=_cmd_modes)

    p = commands.add_parser("certify", help="Sturm real-rootedness certification")
    _add_family_options(p)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=_cmd_certify)

    p = commands.add_parser("asymptotics", help="convergence table vs. the laws")
    _add_family_options(p)
    p.add_argument("--grid", default=",".join(str(n) for n in DEFAULT_GRID))
    _add_output_options(p)
    p.set_defaults(func=_cmd_asymptotics)

    p = commands.add_parser("verify", help="run cross-validation suites")
    p.add_argument("--depth", choices=["quick", "full"], default="quick")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: invalid-arguments: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: invalid-arguments: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: io: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help / --version
        return 0 if exc.code in (0, None) else int(exc.code)


def console_main() -> None:
    sys.exit(main())
