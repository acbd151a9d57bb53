#!/usr/bin/env python3
"""Run the two bound-verification campaigns and print their reports.

Defaults reproduce the desk-scale checks: connected cubic graphs to 14
vertices and connected subcubic graphs of minimum degree 2 to 11 vertices,
both against a 3-color bound with the exact solver.  Use --family/--max-n to
push further (long runs benefit from --checkpoint and --jobs).
"""

import argparse
import sys

from locirr.harness import BudgetExhausted, run_campaign


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("cubic", "subcubic", "subcubic-min2", "all"),
                    default=None, help="run a single family instead of both defaults")
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--method", choices=("exact", "constructive"), default="exact")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--checkpoint", default=None)
    args = ap.parse_args()

    if args.family is not None:
        runs = [(args.family, args.max_n or {"cubic": 14}.get(args.family, 11))]
    else:
        runs = [("cubic", 14), ("subcubic-min2", 11)]

    worst = 0
    for family, n_max in runs:
        print(f"== {family}, n <= {n_max}, bound {args.bound}, {args.method} ==")
        try:
            report = run_campaign(
                family, n_max, args.bound, method=args.method,
                jobs=args.jobs, checkpoint=args.checkpoint,
                progress=lambda n, c: print(f"  n={n}: {c} graphs", file=sys.stderr),
            )
        except BudgetExhausted as exc:
            print(f"aborted: {exc}")
            return 4
        print(report.to_json())
        print(f"elapsed: {report.elapsed:.1f}s, "
              f"{'PASS' if report.passed else 'FAIL'} ({report.tested} tested)")
        worst = max(worst, 0 if report.passed else 2)
    return worst


if __name__ == "__main__":
    sys.exit(main())
