#!/usr/bin/env python3
"""Print the field-size thresholds for small all-pairs instances.

For each m, reports the smallest prime field admitting a length-2 code for
the instance whose clients are every singleton and every unordered pair of
messages, alongside the pairwise-independent vector budget q + 1.
"""

import argparse

from plicode.oracle import count_pairwise_independent, min_field_for_length2


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=6)
    args = parser.parse_args()
    for m in range(3, args.max_m + 1):
        q = min_field_for_length2(m)
        if q is None:
            print(f"m={m}: no listed prime admits a length-2 code")
        else:
            budget = count_pairwise_independent(q)
            print(f"m={m}: smallest prime field F_{q} (supports {budget} pairwise independent columns)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
