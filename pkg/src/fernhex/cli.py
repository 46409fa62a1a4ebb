"""Command-line front end: count, verify, recur, sweep, selftest."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .counting import ResourceLimit, count_tilings
from .formulas import NoTheoremRow, clp_count, theorem_count
from .hyper import pp_box
from .hyper import NegativeArgument
from .regions import RegionError, build_hexagon, build_region, parse_spec
from .verification import (RECURRENCES, ConditionMismatch, check_kuo_generic,
                           check_recurrence, random_kuo_instances, sweep)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_MISMATCH = 4


def _emit_records(records: list[dict], args) -> None:
    if getattr(args, "json", False):
        print(json.dumps(records, indent=2, sort_keys=True))
    elif getattr(args, "csv", False):
        fields = sorted({k for r in records for k in r})
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields)
        writer.writeheader()
        writer.writerows(records)
        print(buf.getvalue(), end="")
    else:
        for r in records:
            print("  ".join(f"{k}={v}" for k, v in sorted(r.items())))


def _dump_svg(region, path: str) -> None:
    """Minimal SVG dump of a region's cell set."""
    s3 = 0.866025
    pts = []
    for cell in region.cells:
        r, c, up = cell.row, cell.col, cell.up
        if up:
            tri = [(c + r / 2, r), (c + 1 + r / 2, r), (c + (r + 1) / 2 + 0.5 - 0.5, r + 1)]
            tri[2] = (c + (r + 1) / 2, r + 1)
        else:
            tri = [(c + 1 + r / 2, r), (c + (r + 1) / 2, r + 1), (c + 1 + (r + 1) / 2, r + 1)]
        pts.append((up, [(20 * px + 40, -20 * py * s3 * 2 + 400) for px, py in tri]))
    body = "\n".join(
        f'<polygon points="{" ".join(f"{x:.1f},{y:.1f}" for x, y in tri)}" '
        f'fill="{"#cde" if up else "#fed"}" stroke="#333" stroke-width="0.5"/>'
        for up, tri in pts)
    with open(path, "w") as fh:
        fh.write(f'<svg xmlns="http://www.w3.org/2000/svg" width="900" height="800">\n{body}\n</svg>\n')


def cmd_count(args) -> int:
    try:
        spec = parse_spec(args.spec)
        region = build_region(spec)
    except RegionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.svg:
        _dump_svg(region, args.svg)
    records = []
    status = "OK"
    try:
        if args.method in ("formula", "both"):
            t0 = time.perf_counter()
            formula = theorem_count(spec)
            records.append({"spec": spec.text(), "method": "formula",
                            "count": str(formula),
                            "timing_ms": round(1000 * (time.perf_counter() - t0), 3),
                            "status": "OK"})
        if args.method in ("enumerate", "both"):
            t0 = time.perf_counter()
            brute = count_tilings(region, args.limit_states)
            records.append({"spec": spec.text(), "method": "enumerate",
                            "count": str(brute),
                            "timing_ms": round(1000 * (time.perf_counter() - t0), 3),
                            "status": "OK"})
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NoTheoremRow, NegativeArgument, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.method == "both":
        status = "MATCH" if records[0]["count"] == records[1]["count"] else "MISMATCH"
        for r in records:
            r["status"] = status
    _emit_records(records, args)
    return EXIT_MISMATCH if status == "MISMATCH" else EXIT_OK


def _parse_families(text: str) -> list[str] | None:
    if text in (None, "", "all"):
        return None
    return [f.strip() for f in text.split(",") if f.strip()]


def cmd_verify(args) -> int:
    reports = sweep(families=_parse_families(args.families), max_x=args.max_x,
                    max_z=args.max_z, max_fern=args.max_fern,
                    per_row=args.per_row, limit_states=args.limit_states,
                    max_cells=args.max_cells, jobs=args.jobs)
    records = [r.to_dict() for r in reports]
    checked = [r for r in reports if not r.status.startswith("SKIP")]
    failed = [r for r in checked if not r.equal]
    if args.json or args.csv:
        _emit_records(records, args)
    else:
        for r in failed:
            print(f"MISMATCH {r.spec}: formula={r.formula} enumerate={r.brute}")
    print(f"checked={len(checked)} matched={len(checked) - len(failed)} "
          f"mismatched={len(failed)} skipped={len(reports) - len(checked)}",
          file=sys.stderr)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_sweep(args) -> int:
    return cmd_verify(args)


def cmd_recur(args) -> int:
    if args.list:
        for rec_id in sorted(RECURRENCES):
            rec = RECURRENCES[rec_id]
            print(f"{rec_id:12s} {rec.family}:{rec.position} [{rec.condition}]")
        return EXIT_OK
    if not args.id or not args.spec:
        print("error: recurrence id and base spec required", file=sys.stderr)
        return EXIT_USAGE
    if args.id not in RECURRENCES:
        print(f"error: unknown recurrence id {args.id!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        base = parse_spec(args.spec)
        report = check_recurrence(args.id, base, args.limit_states)
    except (RegionError, ConditionMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    record = {"id": report.rec_id, "base": report.base, "lhs": str(report.lhs),
              "rhs": str(report.rhs), "equal": report.equal}
    if args.json:
        record["terms"] = [{"spec": s, "count": str(n)} for s, n in report.terms]
        print(json.dumps(record, indent=2))
    else:
        for s, n in report.terms:
            print(f"  {s}  -> {n}")
        print(f"{report.rec_id}: lhs={report.lhs} rhs={report.rhs} equal={report.equal}")
    return EXIT_OK if report.equal else EXIT_MISMATCH


def cmd_selftest(args) -> int:
    failures = 0
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(1, 4):
                if count_tilings(build_hexagon(a, b, c)) != pp_box(a, b, c):
                    failures += 1
                    print(f"FAIL MacMahon {a},{b},{c}")
    print(f"MacMahon hexagons 1..3: {'ok' if failures == 0 else 'FAILED'}")

    from .regions import build_dented_semihexagon
    clp_bad = 0
    for seq in [(1,), (1, 1, 1), (2, 1, 2), (2, 2, 2), (1, 2, 1, 2)]:
        if clp_count(seq) != count_tilings(build_dented_semihexagon(seq)):
            clp_bad += 1
            print(f"FAIL CLP {seq}")
    print(f"CLP spot checks: {'ok' if clp_bad == 0 else 'FAILED'}")
    failures += clp_bad

    kuo_bad = 0
    for adj, u, v, w, s, variant in random_kuo_instances(10, seed=args.rng_seed):
        if not check_kuo_generic(adj, u, v, w, s, variant):
            kuo_bad += 1
    print(f"Kuo condensation (10 seeded graphs): {'ok' if kuo_bad == 0 else 'FAILED'}")
    failures += kuo_bad

    sample = ["E:1 x=2,y=1,z=4 a=1,2 c=3,2 b=2,1,1",
              "K:1 x=2,y=1,z=3 a=2,3 c=3,2 b=2,2",
              "GBar:3 x=2,y=1,z=2 a=2,2 c=2,2 b=2,3"]
    for text in sample:
        spec = parse_spec(text)
        match = theorem_count(spec) == count_tilings(build_region(spec))
        print(f"cross-check {text}: {'ok' if match else 'FAILED'}")
        failures += 0 if match else 1
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fernhex",
        description="Exact tiling counts for hexagons with three fern-shaped holes")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count tilings of one region")
    p_count.add_argument("spec", help='e.g. "E:1 x=2,y=1,z=4 a=1,2 c=3,2 b=2,1,1"')
    p_count.add_argument("--method", choices=("formula", "enumerate", "both"),
                         default="both")
    p_count.add_argument("--limit-states", type=int, default=10_000_000)
    p_count.add_argument("--json", action="store_true")
    p_count.add_argument("--csv", action="store_true")
    p_count.add_argument("--svg", metavar="FILE", help="dump the region cells as SVG")
    p_count.set_defaults(func=cmd_count)

    for name, help_text in (("verify", "sweep a grid and exit nonzero on mismatch"),
                            ("sweep", "sweep a grid and emit all reports")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--families", default="all",
                       help="comma-separated families (E,F,G,K,EBar,...) or 'all'")
        p.add_argument("--max-x", type=int, default=3)
        p.add_argument("--max-z", type=int, default=3)
        p.add_argument("--max-fern", type=int, default=2)
        p.add_argument("--per-row", type=int, default=None,
                       help="stop after this many instances per theorem row")
        p.add_argument("--max-cells", type=int, default=None,
                       help="skip regions larger than this many cells")
        p.add_argument("--limit-states", type=int, default=10_000_000)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--json", action="store_true")
        p.add_argument("--csv", action="store_true")
        p.set_defaults(func=cmd_verify if name == "verify" else cmd_sweep)

    p_recur = sub.add_parser("recur", help="check one condensation recurrence")
    p_recur.add_argument("id", nargs="?", help="recurrence id (see --list)")
    p_recur.add_argument("spec", nargs="?", help="base region spec text")
    p_recur.add_argument("--list", action="store_true", help="list recurrence ids")
    p_recur.add_argument("--limit-states", type=int, default=10_000_000)
    p_recur.add_argument("--json", action="store_true")
    p_recur.set_defaults(func=cmd_recur)

    p_self = sub.add_parser("selftest", help="fast internal consistency checks")
    p_self.add_argument("--rng-seed", type=int, default=20260810)
    p_self.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
