import pytest

from fernhex.counting import count_tilings
from fernhex.formulas import (THEOREM_ROWS, NoTheoremRow, clp_count, p1, p2,
                              phi, psi, q1, q2, s_lists, theorem_count,
                              theorem_value, theta_prime)
from fernhex.hyper import HalfInt
from fernhex.regions import (RegionSpec, build_cored_hexagon,
                             build_dented_semihexagon, build_hexagon,
                             build_region)


def test_polynomials():
    assert p1(2, 2, 2, 2) == 24
    assert p1(1, 1, 1, 1) == 4 + 2 * 4
    assert p2(1, 1, 1, 0) == 9
    assert q1(True, 2, 2, 3) == HalfInt.of(5)
    assert q1(False, 1, 2, 3).twice == 3
    assert q2(1, 1, 1, 1) == 1 * 15 + 1 * (16 - 8 - 1)


def test_phi_specializations():
    assert phi(2, 2, 2, 0).to_count() == 20
    for x, y, z in [(2, 2, 2), (2, 4, 2), (4, 2, 4), (1, 1, 1), (3, 1, 3)]:
        assert phi(x, y, z, 0).to_count() == count_tilings(build_hexagon(x, y, z))


def test_phi_against_brute_force():
    region = build_cored_hexagon(2, 2, 2, 2, "left1")
    assert phi(2, 2, 2, 2).to_count() == count_tilings(region)


def test_psi_against_brute_force():
    region = build_cored_hexagon(1, 2, 2, 1, "left3half")
    assert psi(1, 2, 2, 1).to_count() == 10 == count_tilings(region)


def test_theta_prime_against_brute_force():
    region = build_cored_hexagon(1, 2, 2, 1, "pos1")
    assert theta_prime(1, 2, 2, 1).to_count() == count_tilings(region)


def test_clp_examples():
    assert clp_count(()) == 1
    assert clp_count((5,)) == 1
    assert clp_count((1, 1, 1)) == 2
    seq = (2, 1, 2)
    assert clp_count(seq) == count_tilings(build_dented_semihexagon(seq))


def test_clp_even_length_drops_trailing_gap():
    assert clp_count((1, 1, 1, 2)) == clp_count((1, 1, 1))


def test_clp_matches_oracle_small():
    import itertools
    for n in range(1, 5):
        for seq in itertools.product((0, 1, 2), repeat=n):
            assert clp_count(seq) == count_tilings(build_dented_semihexagon(seq)), seq


def test_theorem_count_paper_flagship():
    spec = RegionSpec("E", 1, 2, 1, 4, (1, 2), (3, 2), (2, 1, 1))
    assert theorem_count(spec) == count_tilings(build_region(spec))


def test_theorem_count_reduces_to_phi_for_bare_core():
    # E:1 with empty side ferns and a single-triangle middle fern is the
    # off-center cored hexagon itself.
    spec = RegionSpec("E", 1, 2, 0, 2, (), (2,), ())
    assert theorem_count(spec) == phi(2, 2 * 0 + 2, 2, 2).to_count()
    assert theorem_count(spec) == count_tilings(build_region(spec))


def test_theorem_count_zero_for_untileable():
    # Valid spec whose region admits no tiling must yield 0 via both paths.
    spec = RegionSpec("E", 1, 0, 1, 2, (), (2, 1), ())
    region = build_region(spec)
    assert count_tilings(region) == theorem_count(spec)


def test_no_theorem_row():
    with pytest.raises(NoTheoremRow):
        theorem_count(RegionSpec("E", 4, 2, 1, 2))


def test_table_has_thirty_rows():
    assert len(THEOREM_ROWS) == 30
    families = {}
    for fam, pos in THEOREM_ROWS:
        families.setdefault(fam, set()).add(pos)
    assert families["E"] == {1, 2, 6}
    assert families["F"] == {1, 2, 3, 4}
    assert families["KBar"] == {5, 6, 7, 8}


def test_e2_prefactor_is_e1_with_first_arguments_interchanged():
    e1 = THEOREM_ROWS[("E", 1)]
    e2 = THEOREM_ROWS[("E", 2)]
    assert e1.prefactor == e2.prefactor == "phi"
    x_expr, big_expr, z_expr = e1.pre_args
    big_shifted = big_expr[:4] + (big_expr[4] + 2,)
    assert e2.pre_args == (big_shifted, x_expr, z_expr)


def test_s_lists_match_printed_flagship_row():
    spec = RegionSpec("E", 1, 2, 1, 4, (1, 2), (3, 2), (2, 1, 1))
    s1, s2 = s_lists(spec)
    # (x+z)/2 = 3; right fern stored (2,1,1,0)
    assert s1 == [1 + 4 - 3, 1, 2, 2, 3, 2 + 4 + 0, 1, 1, 2]
    assert s2 == [1, 2 + 2 + 3, 2, 4, 0, 1, 1, 2, 1 + 3 - 3]


def test_pi_cancellation_asserted():
    spec = RegionSpec("F", 3, 2, 2, 3, (2, 3), (2, 3), (2, 2))
    value = theorem_value(spec)
    assert value.pi_half_exp == 0
    assert value.rat.denominator == 1
