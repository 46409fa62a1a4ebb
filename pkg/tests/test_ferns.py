import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fernhex.ferns import (EMPTY_FERN, FernSeq, fern_arrow, fern_bar,
                           fern_plus_one_last, fern_prepend_zero)

ferns = st.lists(st.integers(0, 4), max_size=6).map(lambda e: FernSeq(tuple(e)))


def test_even_length_storage():
    assert FernSeq((2, 1, 1)).entries == (2, 1, 1, 0)
    assert FernSeq((3, 2)).entries == (3, 2)
    assert EMPTY_FERN.entries == ()


def test_odd_even_sums():
    f = FernSeq((1, 2, 3, 4))
    assert f.odd_sum == 4 and f.even_sum == 6 and f.total == 10


def test_negative_entries_rejected():
    with pytest.raises(ValueError):
        FernSeq((1, -1))


def test_plus_one_last_examples():
    assert fern_plus_one_last(FernSeq((3, 2))).entries == (3, 3)
    assert fern_plus_one_last(FernSeq((3, 2, 1))).entries == (3, 2, 1, 1)
    assert fern_plus_one_last(EMPTY_FERN).entries == (0, 1)


def test_bar_examples():
    assert fern_bar(FernSeq((2, 1, 1))).entries == (0, 1, 1, 2)
    assert fern_bar(FernSeq((3, 2))).entries == (2, 3)
    assert fern_bar(EMPTY_FERN).entries == ()


def test_arrow_examples():
    assert fern_arrow(FernSeq((3, 2))).entries == (0, 2, 3, 0)
    # the appended zero pair normalizes away for the empty fern
    assert fern_arrow(EMPTY_FERN).entries == ()


def test_prepend_zero_examples():
    assert fern_prepend_zero(FernSeq((2, 2))).entries == (0, 2, 2, 0)
    assert fern_prepend_zero(EMPTY_FERN).entries == ()
    assert fern_prepend_zero(FernSeq((1,))).entries == (0, 1)


@given(ferns)
@settings(max_examples=60, deadline=None)
def test_plus_one_adds_exactly_one(f):
    assert fern_plus_one_last(f).total == f.total + 1
    assert len(fern_plus_one_last(f)) % 2 == 0


@given(ferns)
@settings(max_examples=60, deadline=None)
def test_bar_and_arrow_preserve_nonzero_multiset(f):
    nonzero = sorted(v for v in f.entries if v)
    assert sorted(v for v in fern_bar(f).entries if v) == nonzero
    assert sorted(v for v in fern_arrow(f).entries if v) == nonzero


@given(ferns)
@settings(max_examples=60, deadline=None)
def test_transforms_keep_even_length(f):
    for tf in (fern_bar, fern_arrow, fern_prepend_zero, fern_plus_one_last):
        assert len(tf(f)) % 2 == 0
