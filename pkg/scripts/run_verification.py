#!/usr/bin/env python3
"""Run every verification suite and write one JSON report per suite.

Usage:
    python scripts/run_verification.py [--seed N] [--out-dir DIR] [--suite NAME ...]

Exit status is 0 iff every requested suite passes.
"""

import argparse
import json
import pathlib
import sys

from thetacoble.suites import SUITES, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--out-dir", type=pathlib.Path, default=pathlib.Path("reports"))
    parser.add_argument(
        "--suite", action="append", choices=sorted(SUITES),
        help="suite to run (repeatable); default: all suites",
    )
    args = parser.parse_args()

    names = args.suite or sorted(SUITES)
    args.out_dir.mkdir(parents=True, exist_ok=True)

    all_ok = True
    for name in names:
        report = run_suite(name, seed=args.seed)
        path = args.out_dir / f"{name}.json"
        path.write_text(json.dumps(report.to_json(), indent=2) + "\n")
        status = "PASS" if report.passed else "FAIL"
        n_fail = sum(not r.passed for r in report.records)
        print(
            f"[{status}] {name:14s} {len(report.records):3d} checks, "
            f"{n_fail} failing, {report.wall_time:.1f}s -> {path}"
        )
        all_ok &= report.passed
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
