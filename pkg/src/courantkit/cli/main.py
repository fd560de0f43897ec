"""Command-line entry point.

    courantkit run DOC.cdoc [--machine] [--seed N] [--jobs N] [--max-degree D]
    courantkit print DOC.cdoc
    courantkit suite NAME [--count N] [--seed N] [--machine]

Exit status is 0 iff every check passed, 1 if some check failed, 2 on a
parse or usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ..errors import ParseError
from ..suites import SUITES, SuiteConfig, run_suite
from .parser import parse
from .runner import all_passed, render, run


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="courantkit", description="exact checks for 2-plectic and Courant data")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--machine", action="store_true", help="tab-separated output, one line per check")
    common.add_argument("--max-degree", type=int, default=4, help="degree bound for random polynomials")
    sub = ap.add_subparsers(dest="action", required=True)
    p_run = sub.add_parser("run", parents=[common], help="run the commands of a document")
    p_run.add_argument("document", type=Path)
    p_run.add_argument("--jobs", type=int, default=1, help="evaluate commands in N worker processes")
    p_print = sub.add_parser("print", help="print a document in canonical form")
    p_print.add_argument("document", type=Path)
    p_suite = sub.add_parser("suite", parents=[common], help="run a randomized property suite")
    p_suite.add_argument("name", choices=sorted(SUITES))
    p_suite.add_argument("--count", type=int, default=200)
    return ap


def _load(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"{path}: {exc.strerror or exc}", file=sys.stderr)
        raise SystemExit(2)
    try:
        return text, parse(text)
    except ParseError as exc:
        print(f"{path}:{exc}", file=sys.stderr)
        raise SystemExit(2)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if args.action == "print":
        _, doc = _load(args.document)
        sys.stdout.write(str(doc))
        return 0
    seed_note = f"# seed {args.seed}"
    print(seed_note, file=sys.stderr if args.machine else sys.stdout)
    if args.action == "suite":
        cfg = SuiteConfig(args.seed, args.count, args.max_degree)
        report = run_suite(args.name, cfg)
        print(report.machine() if args.machine else str(report))
        return 0 if report.ok else 1
    text, doc = _load(args.document)
    cfg = SuiteConfig(seed=args.seed, max_degree=args.max_degree)
    results = run(doc, cfg, jobs=max(1, args.jobs), source=text)
    sys.stdout.write(render(results, machine=args.machine))
    return 0 if all_passed(results) else 1


if __name__ == "__main__":
    raise SystemExit(main())
