"""Command-line entry point: ``bhpdet {theorem,conjecture,lemmas,hyper}``.

Exit codes: 0 when every check passes, 1 when any fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .config import DEFAULT_B_MAX, DEFAULT_CASES, resolve_seed
from .errors import UsageError
from .report import (LEMMA_FAMILIES, cmd_verify_conjecture, cmd_verify_hyper, cmd_verify_lemmas,
                     cmd_verify_theorem)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--jobs", type=_nonneg, default=1, help="worker processes")

    p = _Parser(prog="bhpdet", description="Exact verification sweeps for the determinant evaluation.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("theorem", parents=[common], help="determinant against the product formula")
    t.add_argument("--b-max", type=_nonneg, default=DEFAULT_B_MAX)
    t.add_argument("--c-max", type=_nonneg)

    c = sub.add_parser("conjecture", parents=[common], help="magnitudes at x = 0")
    c.add_argument("--b-max", type=_nonneg, default=DEFAULT_B_MAX)

    lem = sub.add_parser("lemmas", parents=[common], help="divisibility skeleton")
    lem.add_argument("--b-max", type=_nonneg, default=8)
    lem.add_argument("--family", action="append", default=[], metavar="ID",
                     help=f"repeatable; one of {', '.join(LEMMA_FAMILIES)}")

    h = sub.add_parser("hyper", parents=[common], help="hypergeometric summation rules")
    h.add_argument("--cases", type=_nonneg, default=DEFAULT_CASES)
    h.add_argument("--seed", type=_nonneg)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        seed = resolve_seed(args.seed) if args.command == "hyper" else 0
    except (UsageError, ValueError) as exc:  # ValueError: a malformed BHPDET_SEED
        print(f"bhpdet: error: {exc}", file=sys.stderr)
        return 2
    jobs = max(1, args.jobs)
    try:
        if args.command == "theorem":
            report = cmd_verify_theorem(args.b_max, args.c_max, jobs)
        elif args.command == "conjecture":
            report = cmd_verify_conjecture(args.b_max, jobs)
        elif args.command == "lemmas":
            report = cmd_verify_lemmas(args.b_max, args.family, jobs)
        else:
            report = cmd_verify_hyper(args.cases, seed, jobs)
    except UsageError as exc:
        print(f"bhpdet: error: {exc}", file=sys.stderr)
        return 2
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary
    print(f"{s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped",
          file=sys.stderr)
    return 1 if report.failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
