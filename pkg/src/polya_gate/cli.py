"""Command-line front end.

Data goes to stdout (JSON, CSV or plain text); diagnostics go to stderr.
Exit codes: 0 ok, 1 check failed, 2 usage error, 3 certified not in LP+,
4 degenerate, 5 bad bracket.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import hyper, scan, sfrac, symbolic
from .series import format_rat, rat

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_LP, EXIT_DEGENERATE, EXIT_BAD_BRACKET = 0, 1, 2, 3, 4, 5

VERDICT_EXIT = {
    sfrac.VerdictKind.STIELTJES_UP_TO: EXIT_OK,
    sfrac.VerdictKind.FIRST_NEGATIVE_ALPHA: EXIT_NOT_LP,
    sfrac.VerdictKind.DEGENERATE: EXIT_DEGENERATE,
}


class UsageError(Exception):
    pass


def _rat_arg(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _rat_list(text: str) -> list[Fraction]:
    return [_rat_arg(s) for s in text.split(",") if s.strip()]


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(obj, out)
        out.write("\n")
    else:
        for key, value in obj.items():
            out.write(f"{key}: {value}\n")


def cmd_check(args, out) -> int:
    try:
        params = hyper.HyperParams.parse(args.params)
        verdict = sfrac.lp_plus_verdict(params, args.depth)
    except hyper.InvalidParams as exc:
        raise UsageError(str(exc)) from None
    _emit(verdict.to_json(), args.format, out)
    return VERDICT_EXIT[verdict.kind]


def cmd_scan(args, out) -> int:
    if args.n_max >= 7 and any(b >= 10**5 for b in args.b2s):
        print(
            f"warning: n_max={args.n_max} at b2 >= 1e5 is slow (large exact rationals)",
            file=sys.stderr,
        )
    try:
        points = scan.grid_scan(args.b1, args.gammas, args.b2s, args.n_max, args.depth, args.threads)
    except hyper.InvalidParams as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(scan.CSV_HEADER)
        for p in points:
            w.writerow(p.csv_row())
    elif args.format == "json":
        json.dump([p.to_json() for p in points], out)
        out.write("\n")
    else:
        for p in points:
            out.write(" ".join(p.csv_row()) + "\n")
    return EXIT_OK


def cmd_threshold(args, out) -> int:
    try:
        res = scan.threshold_bisect(args.b1, args.gamma, args.n, args.lo, args.hi, args.prec)
    except scan.BadBracket as exc:
        print(f"bad bracket: {exc}", file=sys.stderr)
        return EXIT_BAD_BRACKET
    except hyper.InvalidParams as exc:
        raise UsageError(str(exc)) from None
    _emit(res.to_json(), args.format, out)
    return EXIT_OK


def cmd_symbolic(args, out) -> int:
    if args.sample:
        rep = symbolic.denominator_sign_sample(args.n, args.sample, args.seed)
        _emit(rep.to_json(), args.format, out)
        return EXIT_OK if not rep.violations else EXIT_FAIL
    if args.gamma is None or args.b1 is None:
        raise UsageError("symbolic needs --gamma and --b1 (or --sample)")
    try:
        row = symbolic.leading_coeff_check(args.n, args.gamma, args.b1)
    except symbolic.DegeneratePivot as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DEGENERATE
    except symbolic.NormalizationAmbiguous as exc:
        print(f"normalization ambiguous: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(row.to_json(), args.format, out)
    return EXIT_OK if row.match else EXIT_FAIL


def cmd_identity(args, out) -> int:
    try:
        if args.which == "driver":
            ok = hyper.identity_driver_check(args.a, args.order)
            report = {"identity": "driver", "a": format_rat(args.a)}
        else:
            if args.b is None:
                raise UsageError("bailey needs --b")
            ok = hyper.identity_bailey_check(args.a, args.b, args.order)
            report = {"identity": "bailey", "a": format_rat(args.a), "b": format_rat(args.b)}
    except hyper.InvalidParams as exc:
        raise UsageError(str(exc)) from None
    report.update(order=args.order, holds=ok)
    _emit(report, args.format, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_laguerre(args, out) -> int:
    try:
        poly = hyper.laguerre_reduction(args.b, args.m, args.guard)
    except hyper.InvalidParams as exc:
        raise UsageError(str(exc)) from None
    # zeros of P(x) are the negatives of the Laguerre-polynomial zeros
    reflected = symbolic.Poly1([c * (-1) ** k for k, c in enumerate(poly.coeffs)], "x")
    positive = symbolic.sturm_real_roots(reflected, 0, None)
    report = {
        "b": format_rat(args.b),
        "m": args.m,
        "degree": poly.degree,
        "coeffs": [format_rat(c) for c in poly.coeffs],
        "laguerre_roots_in_positive_axis": positive,
    }
    _emit(report, args.format, out)
    return EXIT_OK if positive == args.m else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="polya-gate", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="LP+ sign test for pFq parameters")
    c.add_argument("params", help="'a1,...;b1,...', e.g. '3/2;1,60'")
    c.add_argument("--depth", type=int, default=12)
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("scan", parents=[common], help="grid of first-negative-alpha verdicts")
    s.add_argument("--b1", type=_rat_arg, required=True)
    s.add_argument("--gammas", type=_rat_list, required=True)
    s.add_argument("--b2s", type=_rat_list, required=True)
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--depth", type=int, default=None)
    s.set_defaults(func=cmd_scan)

    t = sub.add_parser("threshold", parents=[common], help="bisect the b2 where alpha_n turns negative")
    t.add_argument("--b1", type=_rat_arg, required=True)
    t.add_argument("--gamma", type=_rat_arg, required=True)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--lo", type=_rat_arg, required=True)
    t.add_argument("--hi", type=_rat_arg, required=True)
    t.add_argument("--prec", type=_rat_arg, default=Fraction(1, 1000))
    t.set_defaults(func=cmd_threshold)

    y = sub.add_parser("symbolic", parents=[common], help="leading-coefficient / denominator checks")
    y.add_argument("--n", type=int, required=True)
    y.add_argument("--gamma", type=_rat_arg)
    y.add_argument("--b1", type=_rat_arg)
    y.add_argument("--sample", type=int, default=0, help="sample D_n > 0 this many times instead")
    y.set_defaults(func=cmd_symbolic)

    i = sub.add_parser("identity", parents=[common], help="formal product identities")
    i.add_argument("which", choices=["driver", "bailey"])
    i.add_argument("--a", type=_rat_arg, required=True)
    i.add_argument("--b", type=_rat_arg)
    i.add_argument("--order", type=int, default=30)
    i.set_defaults(func=cmd_identity)

    g = sub.add_parser("laguerre", parents=[common], help="1F1(b+m; b; x) = e^x P(x) reduction")
    g.add_argument("--b", type=_rat_arg, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--guard", type=int, default=None)
    g.set_defaults(func=cmd_laguerre)
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.command == "scan" else "json"
    if args.threads is None:
        args.threads = scan.default_threads()
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    if getattr(args, "depth", None) is not None and args.depth < 1:
        parser.error("--depth must be >= 1")
    if args.format == "csv" and args.command != "scan":
        parser.error("csv output is only available for scan")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
