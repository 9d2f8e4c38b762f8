#!/usr/bin/env python3
"""Full randomized sweep of the factorwise Milnor-class identities.

Runs both the expansion and the telescoped-sum checks against the
product rule for n = 2..8, r = 1..min(4, n), 100 trials per cell.
Exact arithmetic: any failure would be a genuine counterexample.
"""

import sys
import time

from milnorcalc.identities import sweep


def main() -> int:
    start = time.perf_counter()
    failures = 0
    for report in sweep(n_range=range(2, 9), max_r=4, trials=100, seed=0):
        print(report.render())
        failures += len(report.failures)
    elapsed = time.perf_counter() - start
    print(f"total failures: {failures}  ({elapsed:.1f}s)")
    return 0 if failures == 0 else 3


if __name__ == "__main__":
    sys.exit(main())
