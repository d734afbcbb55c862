#!/usr/bin/env python3
"""Run every identity verifier on the default sweep grid and print a
summary table.  Counterexamples, if any, are printed as JSON."""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from umbralcalc.identities import DEFAULT_GRID, verify_all


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="grid parallelism degree (default: all cores)")
    parser.add_argument("--collect-all", action="store_true")
    args = parser.parse_args()

    ok = True
    started = time.perf_counter()
    for report in verify_all(DEFAULT_GRID, collect_all=args.collect_all, jobs=args.jobs):
        ok = ok and report.passed
        print(f"{report.identity:12s} {report.status:5s} "
              f"checked={report.checked:7d} {report.elapsed_ms/1000:8.2f}s")
        for failure in report.counterexamples:
            print("  counterexample:", json.dumps(failure))
    print(f"{'TOTAL':12s} {'pass' if ok else 'FAIL':5s} "
          f"{'':16s}{time.perf_counter() - started:8.2f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
