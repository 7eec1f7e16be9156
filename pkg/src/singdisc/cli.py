"""Command-line interface.

Three subcommands:

  compute <specfile> | --spec '<json>'   one report, cross-checked
  tables                                 recompute the golden summary tables
  selfcheck                              run the cross-realization corpus

Exit codes: 0 on success (verdicts COMPATIBLE / ORDER_ONLY_MATCH /
SINGLE_ROUTE, golden tables clean, corpus free of mismatches); 1 when a
cross-check disagrees; 2 on invalid input.  All numeric output is exact
decimal.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exact import ValidationError
from .report import compute_report, parse_spec, render_report, report_to_json
from .tables import reproduce_tables, selfcheck_corpus

OK_VERDICTS = ("COMPATIBLE", "ORDER_ONLY_MATCH", "SINGLE_ROUTE")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singdisc",
        description="Exact obstruction-group calculator for normal surface "
                    "singularities: resolution lattice, link homology and "
                    "integral monodromy routes, cross-checked.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="compute every applicable realization for one input")
    p_compute.add_argument("specfile", nargs="?",
                           help="path to a JSON singularity description")
    p_compute.add_argument("--spec", metavar="JSON",
                           help="inline JSON singularity description")

    p_tables = sub.add_parser(
        "tables", help="recompute the golden summary tables and diff them")
    p_self = sub.add_parser(
        "selfcheck", help="cross-check every realization on the built-in corpus")

    for p in (p_compute, p_tables, p_self):
        p.add_argument("--json", action="store_true",
                       help="emit the machine-readable report")
        p.add_argument("--quiet", action="store_true",
                       help="suppress the human-readable output")
    return parser


def _cmd_compute(args) -> int:
    if (args.specfile is None) == (args.spec is None):
        print("error: give exactly one of <specfile> or --spec", file=sys.stderr)
        return 2
    if args.spec is not None:
        text = args.spec
    else:
        try:
            with open(args.specfile, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: cannot read {args.specfile}: {exc}", file=sys.stderr)
            return 2
    spec = parse_spec(text)
    report = compute_report(spec)
    if args.json:
        print(report_to_json(report))
    if not args.quiet and not args.json:
        print(render_report(report))
    return 0 if report.verdict in OK_VERDICTS else 1


def _cmd_tables(args) -> int:
    result = reproduce_tables()
    if args.json:
        print(json.dumps(result.to_obj(), indent=2))
    if not args.quiet and not args.json:
        print(result.render())
    return 0 if result.ok else 1


def _cmd_selfcheck(args) -> int:
    corpus = selfcheck_corpus()
    mismatches = []
    counts: dict[str, int] = {}
    reports = []
    for spec in corpus:
        report = compute_report(spec)
        reports.append(report)
        counts[report.verdict] = counts.get(report.verdict, 0) + 1
        if report.verdict == "MISMATCH":
            mismatches.append(report)
    if args.json:
        print(json.dumps({
            "cases": len(corpus),
            "verdicts": {k: counts[k] for k in sorted(counts)},
            "mismatches": [
                {"singularity": r.spec.describe(), "details": list(r.warnings)}
                for r in mismatches
            ],
        }, indent=2))
    if not args.quiet and not args.json:
        print(f"selfcheck: {len(corpus)} cases")
        for verdict in sorted(counts):
            print(f"  {verdict}: {counts[verdict]}")
        for r in mismatches:
            print(f"  mismatch at {r.spec.describe()}:")
            for w in r.warnings:
                print(f"    {w}")
    return 0 if not mismatches else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "tables":
            return _cmd_tables(args)
        return _cmd_selfcheck(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
