#!/usr/bin/env python3
"""Run every property suite and print one status line per check, with timings."""
import argparse
import sys
import time

from galjacobi.verify import SUITES, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=None)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    args = ap.parse_args()
    ok = True
    for name in args.suites:
        t = time.perf_counter()
        rep = run_suite(name, args.max_order)
        dt = time.perf_counter() - t
        print(f"{name} ({dt:.1f}s)")
        for chk in rep.checks:
            line = f"  {chk.status:7} {chk.name} [{chk.cases} cases]"
            if chk.failures:
                line += f" first failure: {chk.witness}"
            print(line)
        ok &= rep.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
