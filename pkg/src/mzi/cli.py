"""Command-line interface.

Exit codes: 0 success (all reports verified or skipped), 1 verification
failure or internal inconsistency, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .connectivity import ClassConstraint, in_class
from .constructions import FAMILIES, ConstructionError, build
from .enumeration import EnumerationError, extremal_search
from .graph import Graph6Error, GraphError, parse_graph6, to_graph6
from .indices import DegenerateIndexError, index_value, m1, m2, pi1_exact, pi1_log, pi2_exact, pi2_log
from .verify import SUITES, VerificationReport, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CLASS_KINDS = {"vnk": "V", "enk": "E", "gnp": "P"}


class UsageError(Exception):
    pass


def _jobs_default() -> int:
    raw = os.environ.get("MZI_JOBS")
    if raw is None:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mzi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index values of graph6 input")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="a single graph6 string")
    src.add_argument("--file", help="file with one graph6 per line ('-' for stdin)")
    p.add_argument("--extra", action="store_true", help="also print M1, M2 and log values")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("construct", help="emit graph6 of a named family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--legs", help="comma-separated leg lengths for the a1 family")
    p.add_argument("--format", choices=("g6", "json", "text"), default="g6")

    p = sub.add_parser("extremal", help="exhaustive extremal search over a class")
    p.add_argument("--class", dest="cls", required=True, choices=sorted(CLASS_KINDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--index", choices=("pi1", "pi2"), default="pi1")
    p.add_argument("--direction", choices=("max", "min"), default="max")
    p.add_argument("--format", choices=("json", "csv", "g6", "text"), default="json")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help=f"all or one of: {', '.join(SUITES)}")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--tree-n-max", type=int, default=9)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--out", help="write reports here instead of stdout")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--no-timing", action="store_true", help="omit runtime_ms for byte-stable output")
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_compute(args: argparse.Namespace) -> int:
    if args.graph6 is not None:
        lines = [args.graph6]
    elif args.file == "-":
        lines = sys.stdin.read().splitlines()
    else:
        try:
            with open(args.file, encoding="ascii") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    rows = []
    for line in lines:
        if not line.strip():
            continue
        try:
            g = parse_graph6(line.strip())
        except (Graph6Error, GraphError) as exc:
            raise UsageError(f"cannot parse {line.strip()!r}: {exc}") from exc
        row = {"graph6": to_graph6(g), "pi1": pi1_exact(g), "pi2": pi2_exact(g)}
        if args.extra:
            row["m1"] = m1(g)
            row["m2"] = m2(g)
            try:
                row["pi1_log"] = pi1_log(g)
                row["pi2_log"] = pi2_log(g)
            except DegenerateIndexError:
                row["pi1_log"] = row["pi2_log"] = None
        rows.append(row)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", None)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else ["graph6", "pi1", "pi2"],
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue(), None)
    else:
        for row in rows:
            _emit(" ".join(f"{k}={v}" for k, v in row.items() if k != "graph6") + "\n", None)
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    legs = None
    if args.legs:
        try:
            legs = [int(x) for x in args.legs.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --legs {args.legs!r}") from exc
    try:
        graphs = build(args.family, args.n, k=args.k, p=args.p, legs=legs, j=args.j)
    except (ConstructionError, EnumerationError, GraphError) as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps([{"graph6": to_graph6(g), "pi1": pi1_exact(g), "pi2": pi2_exact(g)}
                          for g in graphs], indent=2) + "\n", None)
    elif args.format == "text":
        for g in graphs:
            _emit(f"{to_graph6(g)} n={g.n} edges={g.edges()}\n", None)
    else:
        for g in graphs:
            _emit(to_graph6(g) + "\n", None)
    return EXIT_OK


def _cmd_extremal(args: argparse.Namespace) -> int:
    kind = CLASS_KINDS[args.cls]
    bound = args.p if kind == "P" else args.k
    if bound is None:
        raise UsageError(f"class {args.cls} needs --{'p' if kind == 'P' else 'k'}")
    try:
        c = ClassConstraint(args.n, kind, bound)
        report = extremal_search(c, args.index, args.direction, jobs=args.jobs or _jobs_default())
    except (ValueError, EnumerationError) as exc:
        raise UsageError(str(exc)) from exc
    for code in report.witnesses:
        g = parse_graph6(code)
        if index_value(g, args.index) != report.value or not in_class(g, c):
            sys.stderr.write(f"internal inconsistency: witness {code} does not attain {report.value}\n")
            return EXIT_FAIL
    data = report.to_dict()
    if args.format == "json":
        _emit(json.dumps(data, indent=2) + "\n", None)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["class", "n", "bound", "index", "direction", "value", "class_size", "witness"])
        for code in report.witnesses:
            writer.writerow([args.cls, c.n, c.bound, args.index, args.direction, report.value,
                             report.class_size, code])
        _emit(buf.getvalue(), None)
    elif args.format == "g6":
        _emit("".join(code + "\n" for code in report.witnesses), None)
    else:
        _emit(f"{args.direction} {args.index} over {c.label}: {report.value} "
              f"({len(report.witnesses)} witness(es) among {report.class_size})\n", None)
    return EXIT_OK


CSV_FIELDS = ["suite", "n", "kind", "k", "p", "status", "expected_pi1", "observed_pi1",
              "expected_pi2", "observed_pi2", "class_size", "runtime_ms"]


def _csv_reports(reports: list[VerificationReport], timing: bool) -> str:
    buf = io.StringIO()
    fields = CSV_FIELDS if timing else CSV_FIELDS[:-1]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = {
            "suite": r.suite,
            "n": r.params.get("n", r.params.get("n_max", "")),
            "kind": r.params.get("kind", ""),
            "k": r.params.get("k", ""),
            "p": r.params.get("p", ""),
            "status": r.status,
            "expected_pi1": r.expected.get("pi1", ""),
            "observed_pi1": r.observed.get("pi1", ""),
            "expected_pi2": r.expected.get("pi2", ""),
            "observed_pi2": r.observed.get("pi2", ""),
            "class_size": "" if r.class_size is None else r.class_size,
        }
        if timing:
            row["runtime_ms"] = round(r.runtime_ms, 3)
        writer.writerow(row)
    return buf.getvalue()


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; expected all or one of {', '.join(SUITES)}")
    if args.n_max < 1 or args.tree_n_max < 1:
        raise UsageError("--n-max and --tree-n-max must be positive")
    if args.n_max > 8 or args.tree_n_max > 12:
        raise UsageError("--n-max is capped at 8 and --tree-n-max at 12")
    reports = run_suite(args.suite, args.n_max, args.tree_n_max, jobs=args.jobs or _jobs_default())
    timing = not args.no_timing
    if args.format == "json":
        text = json.dumps([r.to_dict(timing=timing) for r in reports], indent=2) + "\n"
    elif args.format == "csv":
        text = _csv_reports(reports, timing)
    else:
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.params.items())
            lines.append(f"{r.status:<16} {r.suite} {params}")
        bad = sum(1 for r in reports if not r.ok)
        lines.append(f"{len(reports)} reports, {bad} not verified")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


COMMANDS = {
    "compute": _cmd_compute,
    "construct": _cmd_construct,
    "extremal": _cmd_extremal,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"mzi {args.command}: {exc}\n")
        return EXIT_USAGE
