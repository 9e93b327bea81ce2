"""Batch command line: ``dumont {enumerate,count,series,stats,verify}``.

Exit codes: 0 success (or all must-pass checks pass), 1 a must-pass check
failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import CATALOG, FormulaError, formula, statistic_gf
from .enumeration import KINDS, BoundError, count_table, enumerate_family, family, joint_distribution
from .patterns import PatternError
from .perm import STATISTICS
from .series import SeriesError
from .verify import REGISTRY, UnknownCheckError, VerificationReport, run_all, run_check


class UsageError(Exception):
    pass


def _contain_arg(text: str) -> tuple[str, int]:
    pattern, sep, r = text.rpartition(":")
    if not sep or not r.isdigit():
        raise argparse.ArgumentTypeError(f"expected PATTERN:R, got {text!r}")
    return pattern, int(r)


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=KINDS, default="dumont-first")
    p.add_argument("--avoid", nargs="+", default=[], metavar="PATTERN")
    p.add_argument("--contain", nargs="+", default=[], type=_contain_arg, metavar="PATTERN:R")
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dumont", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the members of a family")
    p.add_argument("--n", type=int, required=True)
    _family_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("count", help="CSV table of family sizes for n = 0..n-max")
    p.add_argument("--n-max", type=int, required=True)
    _family_flags(p)
    p.add_argument("--by-stat", choices=STATISTICS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("series", help="expand a catalog generating function")
    p.add_argument("--formula", required=True, metavar="NAME")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("stats", help="statistic distribution of 132-avoiding Dumont permutations vs its formula")
    p.add_argument("--stat", choices=STATISTICS, required=True)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("verify", help="check theorems against enumeration")
    p.add_argument("--theorem", default="all", metavar="ID|all")
    p.add_argument("--n-max", type=int, default=14)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--list", action="store_true", help="print the registered ids and exit")
    return parser


def _cmd_enumerate(args, out) -> int:
    spec = family(args.kind, args.avoid, args.contain, n=args.n)
    perms = [str(p) for p in enumerate_family(spec)]
    if args.format == "json":
        out.write(json.dumps(perms) + "\n")
    else:
        for s in perms:
            out.write(s + "\n")
    return 0


def _cmd_count(args, out) -> int:
    if args.by_stat:
        table = joint_distribution(args.n_max, args.kind, args.avoid, args.by_stat, args.contain, args.threads)
    else:
        table = count_table(family(args.kind, args.avoid, args.contain), args.n_max, workers=args.threads)
    out.write(table.to_json() + "\n" if args.format == "json" else table.to_csv())
    return 0


def _cmd_series(args, out) -> int:
    if args.formula not in CATALOG:
        raise UsageError(f"unknown formula {args.formula!r}; known: {', '.join(CATALOG)}")
    s = formula(args.formula, args.terms, k=args.k, r=args.r)
    out.write(s.to_json() + "\n" if args.format == "json" else " ".join(str(c) for c in s) + "\n")
    return 0


def _cmd_stats(args, out) -> int:
    table = joint_distribution(args.n_max, "dumont-first-132-avoiding", (), args.stat, workers=args.threads)
    slices = {k: statistic_gf(args.stat, k, args.n_max) for k in range(args.n_max + 2)}
    out.write("n,k,count,formula\n")
    for n in range(args.n_max + 1):
        for k in range(args.n_max + 2):
            c, f = table[(n, k)], slices[k][n]
            if c or f:
                out.write(f"{n},{k},{c},{f}\n")
    return 0


def _cmd_verify(args, out) -> int:
    if args.list:
        for cid, check in REGISTRY.items():
            out.write(f"{cid}\t{check.tier}\t{check.anchor}\n")
        return 0
    if args.theorem == "all":
        report = run_all(args.n_max, workers=args.threads)
    else:
        if args.theorem not in REGISTRY:
            raise UsageError(f"unknown theorem id {args.theorem!r}")
        report = VerificationReport([run_check(args.theorem, args.n_max, workers=args.threads)])
    out.write(report.to_json() + "\n" if args.format == "json" else report.to_text())
    return 0 if report.ok else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "series": _cmd_series,
    "stats": _cmd_stats,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, PatternError, FormulaError, SeriesError, BoundError, UnknownCheckError, ValueError) as exc:
        msg = exc.args[0] if exc.args else exc
        sys.stderr.write(f"dumont {args.command}: error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
