from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fernhex.hyper import H, HalfInt, HyperValue, NegativeArgument, half, pp_box


def test_halfint_basics():
    n = HalfInt(5)  # 5/2
    assert not n.is_integer
    assert n.floor() == 2 and n.ceil() == 3
    assert (n + 1).twice == 7
    assert half(3 + HalfInt.of(0)).twice == 3


def test_hyperfactorial_integer_values():
    assert H(0) == HyperValue(Fraction(1))
    assert H(1) == HyperValue(Fraction(1))
    assert H(4) == HyperValue(Fraction(12))  # 0! 1! 2! 3!


def test_hyperfactorial_half_integer():
    val = H(HalfInt(3))  # H(3/2) = Gamma(1/2) Gamma(3/2) = pi/2
    assert val.rat == Fraction(1, 2)
    assert val.pi_half_exp == 2


def test_hyperfactorial_negative_raises():
    with pytest.raises(NegativeArgument):
        H(-1)


def test_hypervalue_count_conversion():
    assert (H(4) * H(2) / H(3)).to_count() == 6
    with pytest.raises(ValueError):
        (H(HalfInt(1))).to_count()   # residual sqrt(pi)


def test_pp_box_examples():
    assert pp_box(0, 5, 7) == 1
    assert pp_box(1, 1, 1) == 2
    assert pp_box(2, 2, 2) == 20


def test_pp_box_brute_force_small():
    # Independent plane-partition enumeration in a 2x2x2 box.
    def plane_partitions(a, b, c):
        rows = [(i, j) for i in range(a) for j in range(b)]

        def extend(values, idx):
            if idx == len(rows):
                return 1
            i, j = rows[idx]
            top = values.get((i - 1, j), c)
            left = values.get((i, j - 1), c)
            total = 0
            for v in range(0, min(top, left) + 1):
                values[(i, j)] = v
                total += extend(values, idx + 1)
            del values[(i, j)]
            return total

        return extend({}, 0)

    for a, b, c in [(1, 1, 1), (2, 2, 2), (2, 3, 1), (3, 2, 2)]:
        assert pp_box(a, b, c) == plane_partitions(a, b, c)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
@settings(max_examples=40, deadline=None)
def test_pp_box_symmetry(a, b, c):
    values = {pp_box(*perm) for perm in permutations((a, b, c))}
    assert len(values) == 1
