"""Command-line interface.

    cgrational coeff M N K I J [--normalized | --racah] [--float-digits D]
    cgrational table M N [--format json|csv|pretty] [--only-k K] [--out PATH]
    cgrational verify M_MAX N_MAX [--suite NAME] [--fail-fast]
    cgrational projector M N P [--k K] [--format json|pretty]

Exit status: 0 on success, 1 when an identity check fails, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import sys
import time
from decimal import Decimal, localcontext

from .clebsch_gordan import cg
from .normalized import format_rational, racah_normalized, wigner
from .tables import (
    build_projectors,
    build_table,
    projectors_to_json,
    projectors_to_pretty,
    su2_labels,
    table_to_csv,
    table_to_json,
    table_to_pretty,
)
from .verify import SUITES, run_suites, worker_count

USAGE_ERROR = 2


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--quiet", action="store_true", help="suppress informational output")

    parser = argparse.ArgumentParser(
        prog="cgrational", description="Exact Clebsch-Gordan coefficients for V(m) x V(n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", parents=[common], help="one coefficient C(m,n,k,i,j)")
    for name in ("m", "n", "k", "i", "j"):
        p.add_argument(name, type=_nonneg)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--normalized", action="store_true", help="unitary value by Wigner's sum")
    mode.add_argument("--racah", action="store_true", help="unitary value by Racah's sum")
    p.add_argument("--float-digits", type=_positive, metavar="D", help="also print a decimal approximation")
    p.add_argument("--su2-labels", action="store_true", help="show half-integer (j1 m1 j2 m2 | j m) labels")

    p = sub.add_parser("table", parents=[common], help="coordinate and Clebsch-Gordan tables")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--only-k", type=_nonneg, metavar="K")
    p.add_argument("--su2-labels", action="store_true", help="add half-integer label columns (csv)")

    p = sub.add_parser("verify", parents=[common], help="exhaustive identity checks")
    p.add_argument("m_max", type=_nonneg)
    p.add_argument("n_max", type=_nonneg)
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--m-min", type=_nonneg, default=0)
    p.add_argument("--n-min", type=_nonneg, default=0)
    p.add_argument("--fail-fast", action="store_true")

    p = sub.add_parser("projector", parents=[common], help="ef matrix and projectors on one weight space")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("p", type=_nonneg)
    p.add_argument("--k", type=_nonneg, metavar="K")
    p.add_argument("--format", choices=("json", "pretty"), default="pretty")
    return parser


def cmd_coeff(args) -> str:
    m, n, k, i, j = args.m, args.n, args.k, args.i, args.j
    if k > min(m, n):
        raise UsageError(f"k={k} exceeds min(m, n)={min(m, n)}")
    lines = []
    if args.su2_labels:
        j1, j2, jj, m1, m2 = su2_labels(m, n, k, i, j)
        text = [format_rational(x) for x in (j1, m1, j2, m2, jj, m1 + m2)]
        lines.append("<{} {}; {} {} | {} {}>".format(*text))
    if args.normalized or args.racah:
        value = (racah_normalized if args.racah else wigner)(m, n, k, i, j)
        lines.append(str(value))
        if args.float_digits:
            lines.append(str(value.to_decimal(args.float_digits)))
    else:
        value = cg(m, n, k, i, j)
        lines.append(format_rational(value))
        if args.float_digits:
            with localcontext() as ctx:
                ctx.prec = args.float_digits + 5
                approx = Decimal(value.numerator) / Decimal(value.denominator)
            lines.append(str(round(approx, args.float_digits)))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> str:
    try:
        doc = build_table(args.m, args.n, args.only_k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        return table_to_json(doc)
    if args.format == "csv":
        return table_to_csv(doc, labels=args.su2_labels)
    return table_to_pretty(doc)


def cmd_projector(args) -> str:
    try:
        doc = build_projectors(args.m, args.n, args.p, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return projectors_to_json(doc) if args.format == "json" else projectors_to_pretty(doc)


def cmd_verify(args) -> tuple[str, bool]:
    if args.m_min > args.m_max or args.n_min > args.n_max:
        raise UsageError("lower bound exceeds upper bound")
    suites = tuple(SUITES) if args.suite == "all" else (args.suite,)
    try:
        workers = worker_count()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    start = time.perf_counter()
    report = run_suites(
        args.m_max, args.n_max, suites,
        m_min=args.m_min, n_min=args.n_min, workers=workers, fail_fast=args.fail_fast,
    )
    elapsed = time.perf_counter() - start
    lines = report.lines()
    lines.append(
        f"{'PASS' if report.passed else 'FAIL'}: {len(report.checks)} identity families, "
        f"m={args.m_min}..{args.m_max}, n={args.n_min}..{args.n_max}, {elapsed:.2f}s"
    )
    return "\n".join(lines) + "\n", report.passed


def _emit(text: str, args) -> None:
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from None
        if not args.quiet:
            print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
            if not args.quiet or args.out:
                _emit(text if not args.quiet else text.splitlines()[-1] + "\n", args)
            return 0 if ok else 1
        handler = {"coeff": cmd_coeff, "table": cmd_table, "projector": cmd_projector}[args.command]
        _emit(handler(args), args)
        return 0
    except UsageError as exc:
        print(f"cgrational {args.command}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
