#!/usr/bin/env python3
"""Run the identity-verification suite and print a per-check table.

Equivalent to ``qgeo verify`` but with a human-readable summary instead of
raw JSON; handy for quickly rechecking the whole diagram at higher trial
counts.
"""

import argparse
import json
import sys

from qgeo.diagrams import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--report", help="also write the JSON report here")
    args = parser.parse_args()

    report = run_suite(args.trials, args.seed, args.tol)

    print(f"{'check':38s} {'trials':>7s} {'max deviation':>14s} {'tolerance':>10s}  result")
    for c in report.checks:
        print(
            f"{c.name:38s} {c.trials:7d} {c.max_deviation:14.3e} {c.tolerance:10.1e}  "
            f"{'pass' if c.passed else 'FAIL'}"
        )
    for w in report.witness_searches:
        dev = f"{w.witness.deviation:.3f}" if w.witness else "none"
        print(f"{w.name:38s} {w.trials:7d} witness deviation {dev:>10s}  "
              f"{'pass' if w.found else 'FAIL'}")
    for e in report.exploratory:
        print(f"{e.name:38s} {e.trials:7d} {e.max_deviation:14.3e} {'(not gated)':>10s}")
    print(f"\noverall: {'pass' if report.overall_pass else 'FAIL'}")

    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
            fh.write("\n")
        print(f"report written to {args.report}")

    return 0 if report.overall_pass else 1


if __name__ == "__main__":
    sys.exit(main())
