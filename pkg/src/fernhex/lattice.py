"""Triangular-lattice cells, regions, and dual graphs.

Oblique integer coordinates: lattice vertex (c, r) sits at the Cartesian
point (c + r/2, r*sqrt(3)/2), so rows are horizontal lattice lines.  An
up-pointing cell Up(r, c) has vertices (c, r), (c+1, r), (c, r+1); a
down-pointing cell Down(r, c) has vertices (c+1, r), (c, r+1), (c+1, r+1).
All geometry in the package is exact integer arithmetic on these indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class TriCell(NamedTuple):
    row: int
    col: int
    up: bool

    def translated(self, dr: int, dc: int) -> "TriCell":
        return TriCell(self.row + dr, self.col + dc, self.up)


def up_cell(row: int, col: int) -> TriCell:
    return TriCell(row, col, True)


def down_cell(row: int, col: int) -> TriCell:
    return TriCell(row, col, False)


def neighbors(cell: TriCell) -> list[TriCell]:
    """Edge-adjacent cells (always of opposite orientation, at most 3)."""
    r, c, up = cell
    if up:
        return [TriCell(r, c, False), TriCell(r, c - 1, False), TriCell(r - 1, c, False)]
    return [TriCell(r, c, True), TriCell(r, c + 1, True), TriCell(r + 1, c, True)]


def rot120(cell: TriCell) -> TriCell:
    """Rotate a cell 120 degrees counterclockwise about the origin vertex."""
    r, c, up = cell
    if up:
        return TriCell(c, -c - r - 1, True)
    return TriCell(c, -c - r - 2, False)


def rot180(cell: TriCell) -> TriCell:
    """Rotate a cell 180 degrees about the origin vertex (flips orientation)."""
    r, c, up = cell
    return TriCell(-r - 1, -c - 1, not up)


@dataclass(frozen=True)
class TriRegion:
    """A finite set of unit triangles.  Holes are simply absent cells."""

    cells: frozenset[TriCell]
    meta: dict = field(default_factory=dict, compare=False)

    @staticmethod
    def from_cells(cells: Iterable[TriCell], meta: dict | None = None) -> "TriRegion":
        return TriRegion(frozenset(cells), meta or {})

    def __len__(self) -> int:
        return len(self.cells)

    def translated(self, dr: int, dc: int) -> "TriRegion":
        return TriRegion(frozenset(x.translated(dr, dc) for x in self.cells), dict(self.meta))

    def rotated120(self) -> "TriRegion":
        return TriRegion(frozenset(rot120(x) for x in self.cells), dict(self.meta))

    def rotated180(self) -> "TriRegion":
        return TriRegion(frozenset(rot180(x) for x in self.cells), dict(self.meta))


def balance(region: TriRegion) -> tuple[int, int]:
    """Exact (#up, #down) cell counts; a tileable region needs them equal."""
    ups = sum(1 for cell in region.cells if cell.up)
    return ups, len(region.cells) - ups


def dual_graph(region: TriRegion) -> dict[TriCell, list[TriCell]]:
    """Adjacency lists of the region's dual graph.

    Vertices are the cells; edges join cells sharing a lattice edge, so the
    graph is planar and bipartite (up cells vs down cells) and tilings of
    the region are exactly its perfect matchings.
    """
    cells = region.cells
    return {cell: [n for n in neighbors(cell) if n in cells] for cell in cells}


def triangle_up(row: int, col: int, size: int) -> set[TriCell]:
    """Cells of an up-pointing triangle with base-left vertex (col, row)."""
    out: set[TriCell] = set()
    for i in range(size):
        for k in range(size - i):
            out.add(TriCell(row + i, col + k, True))
        for k in range(size - i - 1):
            out.add(TriCell(row + i, col + k, False))
    return out


def triangle_down(row: int, col: int, size: int) -> set[TriCell]:
    """Cells of a down-pointing triangle whose top-left vertex is (col, row).

    The top edge runs from (col, row) to (col+size, row); the apex is the
    vertex (col+size, row-size).
    """
    out: set[TriCell] = set()
    for i in range(1, size + 1):
        r = row - i
        for k in range(i - 1, size):
            out.add(TriCell(r, col + k, False))
        for k in range(i, size):
            out.add(TriCell(r, col + k, True))
    return out
