#!/usr/bin/env python3
"""Cross-check every worked example pictured in the source material.

Runs the closed-form count against the brute-force oracle for the thirty
figure instances (one per theorem row) and the two condensation-figure
instances, printing one line per check.
"""

import sys
import time

from fernhex import RegionSpec, build_region, count_tilings, theorem_count
from fernhex.verification import check_recurrence

FIGURE_INSTANCES = [
    ("E", 1, 2, 1, 4, (1, 2), (3, 2), (2, 1, 1)),
    ("E", 2, 2, 1, 4, (1, 2), (3, 2), (2, 1, 1)),
    ("E", 6, 2, 1, 4, (1, 2, 1), (4, 1), (2, 1)),
    ("F", 1, 2, 1, 3, (2, 2), (3, 2), (2, 3)),
    ("F", 2, 2, 1, 3, (2, 2), (3, 2), (2, 3)),
    ("F", 3, 2, 2, 3, (2, 3), (2, 3), (2, 2)),
    ("F", 4, 2, 1, 3, (2, 3), (2, 3), (2, 2)),
    ("G", 1, 2, 1, 2, (2, 2), (2, 3), (3, 2)),
    ("G", 2, 2, 1, 2, (2, 2), (2, 3), (3, 2)),
    ("G", 3, 2, 1, 2, (2, 3), (2, 3), (2, 2)),
    ("G", 4, 2, 1, 2, (2, 2), (2, 3), (3, 2)),
    ("K", 1, 2, 1, 3, (2, 3), (3, 2), (2, 2)),
    ("K", 2, 2, 1, 3, (2, 3), (3, 2), (2, 2)),
    ("K", 3, 2, 1, 3, (2, 2), (3, 2), (3, 2)),
    ("K", 4, 2, 1, 3, (2, 2), (3, 2), (3, 2)),
    ("EBar", 1, 2, 2, 2, (3, 2), (2, 2), (2, 2)),
    ("EBar", 2, 2, 1, 2, (3, 2), (2, 2), (2, 2)),
    ("EBar", 3, 2, 1, 2, (2, 2), (2, 2), (3, 2)),
    ("FBar", 3, 2, 2, 3, (2, 2), (2, 2), (2, 3)),
    ("FBar", 4, 2, 1, 3, (2, 2), (2, 2), (2, 3)),
    ("FBar", 5, 2, 1, 3, (2, 2), (2, 2), (2, 3)),
    ("FBar", 6, 2, 1, 3, (2, 3), (2, 2), (2, 2)),
    ("GBar", 2, 2, 2, 2, (2, 3), (2, 2), (2, 2)),
    ("GBar", 3, 2, 1, 2, (2, 2), (2, 2), (2, 3)),
    ("GBar", 4, 2, 1, 2, (2, 2), (2, 2), (2, 3)),
    ("GBar", 5, 2, 2, 2, (2, 3), (2, 2), (2, 2)),
    ("KBar", 5, 3, 2, 2, (2, 3), (2, 2), (2, 2)),
    ("KBar", 6, 3, 2, 2, (2, 2), (2, 2), (2, 3)),
    ("KBar", 7, 3, 2, 2, (2, 2), (2, 2), (2, 3)),
    ("KBar", 8, 3, 2, 2, (2, 3), (2, 2), (2, 2)),
]

KUO_FIGURE_INSTANCES = [
    ("E1-le", RegionSpec("E", 1, 2, 2, 2, (1, 2), (3, 2), (3, 1))),
    ("K8bar-ge", RegionSpec("KBar", 8, 3, 2, 2, (3, 2), (2, 1), (2, 2))),
]


def main() -> int:
    failures = 0
    for fam, pos, x, y, z, a, c, b in FIGURE_INSTANCES:
        spec = RegionSpec(fam, pos, x, y, z, a, c, b)
        t0 = time.time()
        brute = count_tilings(build_region(spec))
        formula = theorem_count(spec)
        ok = formula == brute
        failures += not ok
        print(f"{'ok ' if ok else 'FAIL'} {spec.text():54s} "
              f"count={brute} ({time.time() - t0:.1f}s)")
    for rec_id, base in KUO_FIGURE_INSTANCES:
        t0 = time.time()
        report = check_recurrence(rec_id, base)
        failures += not report.equal
        print(f"{'ok ' if report.equal else 'FAIL'} recurrence {rec_id} at "
              f"{base.text()} ({time.time() - t0:.1f}s)")
    print("all instances match" if failures == 0 else f"{failures} FAILURES")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
