"""Empirical event frequencies across n, next to the analytic lower bounds.

    python scripts/event_bounds.py --sizes 250 500 1000 2000 --trials 2000
"""

import argparse

from eulerext.experiments import run_event_trials, write_csv


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000])
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--alpha", type=float, default=0.05)
    ap.add_argument("--csv-prefix", default=None, help="write per-n CSVs as PREFIX_<n>.csv")
    args = ap.parse_args()

    for n in args.sizes:
        records, summary = run_event_trials(n, args.trials, args.seed, alpha=args.alpha)
        if args.csv_prefix:
            write_csv(f"{args.csv_prefix}_{n}.csv", records)
        print(f"n={n} w={records[0].w} b0={records[0].b0}")
        for name, s in summary.items():
            mark = "" if s["ok"] else "  <-- below 3 sigma"
            print(f"  {name:8s} {s['freq']:.4f}  (bound {s['bound']:.4f}){mark}")


if __name__ == "__main__":
    main()
