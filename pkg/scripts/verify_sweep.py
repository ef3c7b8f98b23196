#!/usr/bin/env python3
"""Run the randomized oracle-agreement check across every problem.

Example:
    python scripts/verify_sweep.py --n-max 8 --trials 100 --seed 7
"""

import argparse
import sys
import time

from cclose.verify import PROBLEMS, run_verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--k-max", type=int, default=3)
    args = parser.parse_args()

    jobs = [(p, 1, False) for p in PROBLEMS]
    jobs += [("tds", 2, False), ("bwtds", 2, False), ("ds", 1, True), ("im", 1, True)]

    print(f"{'problem':<10} {'r':>2} {'bip':>4} {'agree':>7} {'time':>7}")
    failures = 0
    for problem, r, bipartite in jobs:
        started = time.time()
        report = run_verify(
            problem,
            n_max=args.n_max,
            trials=args.trials,
            seed=args.seed,
            k_max=args.k_max,
            r=r,
            bipartite=bipartite,
        )
        agree = sum(t.agreed for t in report.results)
        print(
            f"{problem:<10} {r:>2} {str(bipartite):>4} "
            f"{agree:>3}/{len(report.results):<3} {time.time() - started:>6.1f}s"
        )
        if not report.ok:
            failures += 1
            for bad in report.disagreements[:3]:
                print(f"  trial {bad.index}: {bad.detail}")
            if report.reproducer:
                print("  reproducer:")
                for line in report.reproducer.splitlines():
                    print(f"    {line}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
