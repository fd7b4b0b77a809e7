#!/usr/bin/env python3
"""Run the greedy-vs-randomized code length comparison and write a CSV.

Defaults reproduce the headline experiment: n in {100, 316, 1000},
m = round(n^0.75), p = 0.3, 20 instances per n. Pass --no-timing for a
byte-reproducible CSV (runtime_ms recorded as 0).
"""

import argparse
import json

from plicode.bench import ExperimentConfig, run_benchmark, write_csv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[100, 316, 1000])
    parser.add_argument("--p", type=float, default=0.3)
    parser.add_argument("--instances", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="comparison.csv")
    parser.add_argument("--summary-out", default=None)
    parser.add_argument("--no-timing", action="store_true")
    args = parser.parse_args()

    config = ExperimentConfig(
        n_values=tuple(args.n),
        p=args.p,
        instances=args.instances,
        base_seed=args.seed,
        timing=not args.no_timing,
    )
    rows, summary = run_benchmark(config)
    write_csv(rows, args.out)
    text = json.dumps(summary, indent=2)
    if args.summary_out:
        with open(args.summary_out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
