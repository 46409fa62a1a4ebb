"""Fern sequences (chains of triangle side-lengths) and their transforms.

A fern is stored with an even number of entries; a trailing 0 pads odd
input.  The trailing zero triangle adds no cells, so padding never changes
the built region.  The four transforms below are the ones the condensation
recurrences and the extremal-case reductions apply to fern slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class FernSeq:
    entries: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.entries):
            raise ValueError(f"fern entries must be nonnegative: {self.entries}")
        entries = self.entries
        if len(entries) % 2:
            entries = entries + (0,)
        while len(entries) >= 2 and entries[-1] == entries[-2] == 0:
            entries = entries[:-2]
        object.__setattr__(self, "entries", entries)

    @staticmethod
    def of(entries: Iterable[int] | "FernSeq") -> "FernSeq":
        if isinstance(entries, FernSeq):
            return entries
        return FernSeq(tuple(int(e) for e in entries))

    @property
    def total(self) -> int:
        return sum(self.entries)

    @property
    def odd_sum(self) -> int:
        """Sum of odd-position entries (1-based a1, a3, ...)."""
        return sum(self.entries[0::2])

    @property
    def even_sum(self) -> int:
        """Sum of even-position entries (1-based a2, a4, ...)."""
        return sum(self.entries[1::2])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        return f"Fern{self.entries}"


EMPTY_FERN = FernSeq(())


def fern_plus_one_last(f: FernSeq) -> FernSeq:
    """Grow the fern's final triangle by one (appending a 1 if empty)."""
    if not f.entries:
        return FernSeq((0, 1))
    return FernSeq(f.entries[:-1] + (f.entries[-1] + 1,))


def fern_bar(f: FernSeq) -> FernSeq:
    """Reverse the stored (even-length) sequence."""
    return FernSeq(tuple(reversed(f.entries)))


def fern_arrow(f: FernSeq) -> FernSeq:
    """Reverse and prepend a 0 (the odd-length counterpart of ``fern_bar``)."""
    if not f.entries:
        return FernSeq((0, 0))
    return FernSeq((0,) + tuple(reversed(f.entries)))


def fern_prepend_zero(f: FernSeq) -> FernSeq:
    """Insert a new 0 entry at the front."""
    return FernSeq((0,) + f.entries)


TRANSFORMS = {
    "identity": lambda f: f,
    "plus_one_last": fern_plus_one_last,
    "bar": fern_bar,
    "arrow": fern_arrow,
    "prepend_zero": fern_prepend_zero,
}
