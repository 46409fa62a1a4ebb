#!/usr/bin/env python3
"""Desk-scale verification sweep over all thirty theorem rows.

Equivalent to `fernhex verify` with the acceptance-grade grid; prints a
per-row summary and exits nonzero on any mismatch.
"""

import argparse
import sys
from collections import Counter

from fernhex.verification import sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-x", type=int, default=3)
    parser.add_argument("--max-z", type=int, default=3)
    parser.add_argument("--per-row", type=int, default=10)
    parser.add_argument("--max-cells", type=int, default=560)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    reports = sweep(max_x=args.max_x, max_z=args.max_z, per_row=args.per_row,
                    max_cells=args.max_cells, jobs=args.jobs)
    tally = Counter()
    for r in reports:
        key = r.spec.split(" ")[0]
        if r.status == "MATCH":
            tally[key, "match"] += 1
        elif r.status == "MISMATCH":
            tally[key, "mismatch"] += 1
            print(f"MISMATCH {r.spec}: formula={r.formula} enumerate={r.brute}")
    rows = sorted({k for k, _ in tally})
    for row in rows:
        print(f"{row:10s} match={tally[row, 'match']:3d} mismatch={tally[row, 'mismatch']}")
    bad = sum(tally[row, "mismatch"] for row in rows)
    print("sweep clean" if bad == 0 else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
