"""Acceptance suite: one test per criterion, every comparison exact.

Each test prints a single PASS line on success; tolerances are zero
everywhere (big-integer equality throughout).
"""

import itertools
import time

import pytest

from fernhex.counting import count_tilings
from fernhex.formulas import (THEOREM_ROWS, clp_count, lambda_prime, phi,
                              psi, psi_prime, s_lists, theorem_value,
                              theta_prime)
from fernhex.hyper import pp_box
from fernhex.hyper import NegativeArgument
from fernhex.regions import (RegionError, RegionSpec, build_cored_hexagon,
                             build_dented_semihexagon, build_hexagon,
                             build_region)
from fernhex.reductions import normalize_zero_triangles, reduce_y_minimal
from fernhex.verification import (RECURRENCES, check_kuo_generic,
                                  check_recurrence, random_kuo_instances)

PI_EXPONENT_FAILURES = []


def _formula_count(spec):
    value = theorem_value(spec)
    if value.pi_half_exp != 0 or value.rat.denominator != 1:
        PI_EXPONENT_FAILURES.append(spec.text())
        raise AssertionError(f"pi failed to cancel for {spec}")
    return value.rat.numerator


def test_criterion_1_macmahon_oracle():
    t0 = time.time()
    for a, b, c in itertools.product(range(1, 4), repeat=3):
        assert count_tilings(build_hexagon(a, b, c)) == pp_box(a, b, c)
    assert pp_box(2, 2, 2) == 20
    elapsed = time.time() - t0
    assert elapsed < 5
    print(f"\nPASS criterion 1: MacMahon oracle, 27 hexagons exact ({elapsed:.2f}s)")


def test_criterion_2_clp_convention_pin():
    t0 = time.time()
    checked = 0
    for n in range(0, 6):
        for seq in itertools.product((0, 1, 2), repeat=n):
            assert clp_count(seq) == count_tilings(build_dented_semihexagon(seq)), seq
            checked += 1
    assert clp_count((1, 1, 1)) == 2
    elapsed = time.time() - t0
    assert elapsed < 30
    print(f"PASS criterion 2: CLP formula vs oracle on {checked} dent sequences ({elapsed:.2f}s)")


def _cored_cases():
    mixed = lambda x, y, z: x % 2 != y % 2 and y % 2 == z % 2
    same = lambda x, y, z: x % 2 == y % 2 == z % 2
    return [("left1", phi, same), ("left3half", lambda x, y, z, m: psi(x, y, z, m), mixed),
            ("pos1", theta_prime, mixed), ("pos2", lambda_prime, mixed),
            ("pos3", psi_prime, mixed)]


def test_criterion_3_conjecture_formulas():
    t0 = time.time()
    compared = 0
    for offset, fn, parity_ok in _cored_cases():
        for x, y, z, m in itertools.product(range(5), range(5), range(5), range(3)):
            if not parity_ok(x, y, z):
                continue
            try:
                region = build_cored_hexagon(x, y, z, m, offset)
            except RegionError:
                continue
            brute = count_tilings(region)
            try:
                value = fn(x, y, z, m)
            except NegativeArgument:
                # Degenerate zero-area hexagons put a pole into the printed
                # product; every such case has at most one tiling.
                assert brute <= 1
                continue
            assert value.pi_half_exp == 0, (offset, x, y, z, m)
            assert value.to_count() == brute, (offset, x, y, z, m)
            compared += 1
    elapsed = time.time() - t0
    assert elapsed < 120
    print(f"PASS criterion 3: cored-hexagon formulas on {compared} regions ({elapsed:.2f}s)")


ACCEPTANCE_FERNS = [(), (1,), (2,), (1, 1), (2, 1), (1, 2), (2, 2), (0, 2), (2, 0)]


def _row_instances(family, position, want=12, max_cells=560):
    combos = []
    for x in range(4):
        for z in range(4):
            for a, c, b in itertools.product(ACCEPTANCE_FERNS, repeat=3):
                combos.append((x, z, a, c, b))
    # Deterministic shuffle for variety without an RNG dependency.
    combos.sort(key=lambda t: hash(t) % 100003)
    produced = []
    for x, z, a, c, b in combos:
        for dy in (0, 1):
            try:
                probe = RegionSpec(family, position, x, 10**6, z, a, c, b)
                spec = RegionSpec(family, position, x, probe.y_min + dy, z, a, c, b)
                region = build_region(spec)
            except RegionError:
                continue
            if len(region) > max_cells:
                continue
            produced.append((spec, region))
            if len(produced) >= want:
                return produced
    return produced


def test_criterion_4_thirty_theorems():
    t0 = time.time()
    per_family = {}
    for family, position in sorted(THEOREM_ROWS):
        instances = _row_instances(family, position)
        assert len(instances) >= 4, f"too few instances for {family}:{position}"
        for spec, region in instances:
            assert _formula_count(spec) == count_tilings(region), spec.text()
        per_family[family] = per_family.get(family, 0) + len(instances)
    assert all(count >= 10 for count in per_family.values()), per_family
    elapsed = time.time() - t0
    assert elapsed < 900
    total = sum(per_family.values())
    print(f"PASS criterion 4: all 30 theorems, {total} instances exact ({elapsed:.2f}s)")


RECURRENCE_SAMPLE = [
    "E1-le", "E1-gt", "E2-le", "F1-le", "F1-gt", "F3-gt", "G1-lt", "G2-gt",
    "G3-eq", "K2-le", "K3-gt", "K4-le", "E1bar-le", "E3bar-ge", "F3bar-le",
    "F6bar-ge", "G4bar-ge", "G5bar-lt", "K7bar-ge", "K8bar-ge", "K8bar-lt",
]

RECURRENCE_FERNS = {
    "a_lt_b": [((1, 1), (1, 1), (2, 1)), ((1, 1), (2, 1), (2, 2)), ((1, 2), (1, 1), (2, 2)),
               ((2, 1), (1, 2), (2, 2))],
    "a_le_b": [((1, 1), (1, 1), (1, 1)), ((1, 1), (2, 1), (2, 2)), ((2, 1), (1, 1), (2, 1)),
               ((1, 2), (1, 1), (1, 2))],
    "a_eq_b": [((1, 1), (1, 1), (1, 1)), ((2, 1), (2, 1), (1, 2)), ((2, 2), (1, 1), (2, 2))],
    "a_ge_b": [((1, 1), (1, 1), (1, 1)), ((2, 2), (2, 1), (1, 2)), ((2, 1), (1, 1), (1, 1)),
               ((1, 2), (2,), (2, 1))],
    "a_gt_b": [((2, 1), (1, 1), (1, 1)), ((2, 2), (2, 1), (1, 2)), ((2, 2), (1, 1), (2, 1)),
               ((2, 1), (1, 2), (1, 1))],
}


def _recurrence_points(rec, want=3, max_cells=620):
    points = []
    for x, z in [(2, 2), (1, 1), (2, 3), (3, 2), (1, 2), (2, 1), (3, 3), (1, 3)]:
        for a, c, b in RECURRENCE_FERNS[rec.condition]:
            for dy in (1, 2):
                try:
                    probe = RegionSpec(rec.family, rec.position, x, 10**6, z, a, c, b)
                    base = RegionSpec(rec.family, rec.position, x, probe.y_min + dy, z, a, c, b)
                    regions = [build_region(t.resolve(base)) for t in rec.terms]
                except RegionError:
                    continue
                if max(len(r) for r in regions) > max_cells:
                    continue
                points.append(base)
                break
            if len(points) >= want:
                return points
        if len(points) >= want:
            return points
    return points


def test_criterion_5_kuo_identities():
    t0 = time.time()
    for adj, u, v, w, s, variant in random_kuo_instances(100, seed=20260810):
        assert check_kuo_generic(adj, u, v, w, s, variant)

    # Both Kuo-application figure instances from the proof section.
    figure_instances = [
        ("E1-le", RegionSpec("E", 1, 2, 2, 2, (1, 2), (3, 2), (3, 1))),
        ("K8bar-ge", RegionSpec("KBar", 8, 3, 2, 2, (3, 2), (2, 1), (2, 2))),
    ]
    for rec_id, base in figure_instances:
        report = check_recurrence(rec_id, base)
        assert report.equal, (rec_id, base.text())

    families_covered = set()
    for rec_id in RECURRENCE_SAMPLE:
        rec = RECURRENCES[rec_id]
        points = _recurrence_points(rec)
        assert len(points) >= 3, f"too few points for {rec_id}"
        for base in points:
            report = check_recurrence(rec, base)
            assert report.equal, (rec_id, base.text())
        families_covered.add(rec.family)
    assert len(families_covered) == 8
    elapsed = time.time() - t0
    assert elapsed < 600
    print(f"PASS criterion 5: 100 Kuo graphs + {len(RECURRENCE_SAMPLE)} recurrences"
          f" x 3 points + both figure instances ({elapsed:.2f}s)")


REDUCTION_INSTANCES = [
    # case 1a
    ("E", 1, 2, 2, (2, 1), (1, 2), (1, 1)), ("EBar", 2, 2, 2, (2, 1), (1, 1), (1, 2)),
    ("F", 3, 2, 3, (2, 2), (1, 1), (2, 1)), ("FBar", 4, 2, 3, (1, 1), (1, 1), (1, 1)),
    # case 1b
    ("E", 2, 2, 2, (1,), (1, 1), (2, 2)), ("GBar", 3, 2, 2, (1,), (1, 1), (2, 2)),
    ("F", 5, 2, 3, (1,), (1, 1), (2, 1)), ("E", 2, 2, 2, (1, 0), (1, 1), (2, 1)),
    ("GBar", 2, 1, 1, (1,), (1, 1), (2, 1)), ("KBar", 8, 2, 3, (1,), (1, 1), (2, 1)),
    # case 1c
    ("E", 2, 2, 2, (1, 1), (1, 1), (2, 1)), ("KBar", 6, 2, 3, (1, 1), (1, 1), (2, 2)),
    ("GBar", 5, 2, 2, (2, 1), (1, 1), (2, 2)),
    # case 2a
    ("E", 1, 2, 2, (1, 1), (1, 2), (2, 1)), ("K", 2, 2, 3, (1, 1), (1, 1), (1, 1)),
    # case 2b
    ("E", 6, 2, 2, (2, 2), (1, 1), (1,)), ("K", 3, 2, 3, (2, 2), (1, 1), (1,)),
    ("G", 1, 2, 2, (2, 1), (1, 1), (1, 1)), ("F", 8, 2, 3, (2, 2), (1, 1), (1,)),
    # case 2c
    ("E", 6, 2, 2, (2, 1), (1, 1), (1, 1)), ("K", 3, 2, 3, (2, 2), (1, 1), (2, 1)),
    ("F", 1, 2, 3, (2, 1), (1, 1), (1, 1)),
]

NORMALIZE_INSTANCES = [
    ("E", 2, 2, 2, 2, (0, 2, 1, 1), (1, 1), (1, 1)),
    ("E", 1, 2, 1, 2, (0, 2, 1, 1), (1, 1), (1, 1)),
    ("E", 2, 2, 1, 2, (0, 0, 1, 1), (1, 1), (1, 1)),
    ("E", 2, 2, 1, 2, (1, 0, 2, 0), (1, 1), (1, 1)),
    ("E", 1, 2, 1, 2, (1, 1), (1, 0, 1), (1, 1)),
    ("E", 1, 2, 1, 2, (1, 1), (0, 1, 1), (2,)),
    ("F", 1, 2, 1, 3, (1, 1), (1, 1), (0, 1, 2, 0)),
    ("K", 4, 2, 1, 3, (1, 1), (1, 1), (0, 0, 2, 1)),
    ("GBar", 3, 2, 1, 2, (0, 1, 1, 1), (1, 1), (1, 1)),
    ("EBar", 1, 2, 1, 2, (1, 1), (1, 1), (0, 2, 1, 1)),
    ("FBar", 4, 2, 1, 3, (1, 1), (1, 1), (0, 1, 2, 0)),
    ("K", 1, 2, 1, 3, (0, 1, 1, 0), (1, 1), (0, 2)),
    ("E", 1, 2, 0, 2, (0, 1), (2, 0, 1, 0), (0, 1, 0, 2)),
]


def test_criterion_6_lemma_reductions():
    t0 = time.time()
    checked = 0
    for fam, pos, x, z, a, c, b in REDUCTION_INSTANCES:
        probe = RegionSpec(fam, pos, x, 10**6, z, a, c, b)
        spec = RegionSpec(fam, pos, x, probe.y_min, z, a, c, b)
        reduced = reduce_y_minimal(spec)
        assert count_tilings(build_region(spec)) == count_tilings(build_region(reduced)), spec.text()
        checked += 1
    for fam, pos, x, y, z, a, c, b in NORMALIZE_INSTANCES:
        spec = RegionSpec(fam, pos, x, y, z, a, c, b)
        out = normalize_zero_triangles(spec)
        assert count_tilings(build_region(spec)) == count_tilings(build_region(out)), spec.text()
        checked += 1
    elapsed = time.time() - t0
    assert checked >= 20
    assert elapsed < 300
    print(f"PASS criterion 6: {checked} lemma-reduction instances count-preserving ({elapsed:.2f}s)")


def test_criterion_7_pi_cancellation():
    # theorem_value / _formula_count asserted the exponent inline during
    # criteria 3 and 4; this records that nothing slipped through.
    assert PI_EXPONENT_FAILURES == []
    print("PASS criterion 7: pi exponent zero in every formula evaluation")


BASE_CASE_INSTANCES = [
    ("E", 1, 4, 1, 0), ("E", 1, 0, 1, 4), ("E", 2, 2, 1, 0), ("E", 6, 2, 1, 0),
    ("F", 3, 3, 1, 0), ("F", 3, 0, 1, 3), ("F", 1, 3, 2, 0), ("K", 1, 0, 2, 3),
    ("G", 2, 0, 2, 2), ("EBar", 1, 4, 1, 0), ("EBar", 1, 0, 1, 4),
    ("FBar", 3, 3, 1, 0), ("KBar", 5, 0, 1, 3), ("GBar", 2, 0, 2, 2),
]


def test_criterion_8_base_cases_split():
    from fernhex.formulas import s_list_upper_bumped
    from fernhex.verification import split_along_fern_line

    t0 = time.time()
    checked = 0
    for fam, pos, x, y, z in BASE_CASE_INSTANCES:
        try:
            probe = RegionSpec(fam, pos, x, 10**6, z, (1, 1), (1, 1), (1, 1))
            spec = RegionSpec(fam, pos, x, max(probe.y_min, 0) + y, z,
                              (1, 1), (1, 1), (1, 1))
            region = build_region(spec)
        except RegionError:
            continue
        upper, lower, bumped = split_along_fern_line(region)
        s1, s2 = s_lists(spec)
        up_count, low_count = count_tilings(upper), count_tilings(lower)
        want_upper = clp_count(s_list_upper_bumped(spec)) if bumped else clp_count(s1)
        assert up_count == want_upper, spec.text()
        assert low_count == clp_count(s2), spec.text()
        assert count_tilings(region) == up_count * low_count, spec.text()
        checked += 1
    assert checked >= 10
    elapsed = time.time() - t0
    assert elapsed < 120
    print(f"PASS criterion 8: region splitting on {checked} x=0/z=0 instances ({elapsed:.2f}s)")
