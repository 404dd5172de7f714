"""Run every verification sweep and write the reports into one directory.

    python scripts/run_all_sweeps.py --out-dir reports --jobs 4
"""

import argparse
import pathlib
import sys

from bhpdet.config import DEFAULT_B_MAX, DEFAULT_CASES, resolve_seed
from bhpdet.report import (cmd_verify_conjecture, cmd_verify_hyper, cmd_verify_lemmas,
                           cmd_verify_theorem)


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out-dir", default="reports")
    p.add_argument("--b-max", type=int, default=DEFAULT_B_MAX)
    p.add_argument("--lemma-b-max", type=int, default=8)
    p.add_argument("--cases", type=int, default=DEFAULT_CASES)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    args = p.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    reports = {
        "theorem": cmd_verify_theorem(args.b_max, jobs=args.jobs),
        "conjecture": cmd_verify_conjecture(args.b_max, jobs=args.jobs),
        "lemmas": cmd_verify_lemmas(args.lemma_b_max, jobs=args.jobs),
        "hyper": cmd_verify_hyper(args.cases, resolve_seed(args.seed), jobs=args.jobs),
    }
    failed = 0
    for name, report in reports.items():
        (out / f"{name}.json").write_text(report.to_json(), encoding="utf-8")
        s = report.summary
        print(f"{name:<11} total {s['total']:>5}  passed {s['passed']:>5}  "
              f"failed {s['failed']:>3}  skipped {s['skipped']:>3}")
        failed += s["failed"]
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
