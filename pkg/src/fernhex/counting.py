"""Exact brute-force tiling and matching counters.

Everything here is arbitrary-precision integer arithmetic; there is no
floating point and no approximation.  ``count_tilings`` is the oracle the
closed-form formulas are checked against, so it must stay independent of
the formula code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import TriCell, TriRegion, balance, neighbors


class ResourceLimit(Exception):
    """Raised when the memo table would exceed the configured state cap."""


DEFAULT_STATE_LIMIT = 10_000_000


def _scan_width(cells: frozenset[TriCell]) -> int:
    """Max scan-order distance between matchable neighbours (frontier width)."""
    order = {cell: i for i, cell in enumerate(sorted(cells, key=_scan_key))}
    width = 1
    for cell, i in order.items():
        for n in neighbors(cell):
            j = order.get(n)
            if j is not None and j > i:
                width = max(width, j - i)
    return width


def _scan_key(cell: TriCell):
    # Up before Down at the same (row, col): Up(r,c)'s in-row partners are
    # Down(r,c-1) and Down(r,c), both earlier or equal in column order.
    return (cell.row, cell.col, 0 if cell.up else 1)


def count_tilings(region: TriRegion, limit_states: int = DEFAULT_STATE_LIMIT) -> int:
    """Number of lozenge tilings of ``region``, exactly.

    Identified with perfect matchings of the dual graph and counted by a
    broken-profile sweep over the cells in row-major order.  The frontier
    state records which already-scanned decision is pending for each cell
    inside the active window.  Holes need no special treatment.
    """
    ups, downs = balance(region)
    if ups != downs:
        return 0
    if not region.cells:
        return 1

    best = None
    for variant in (region, region.rotated120(), region.rotated120().rotated120()):
        w = _scan_width(variant.cells)
        if best is None or w < best[0]:
            best = (w, variant)
    _, region = best

    cells = sorted(region.cells, key=_scan_key)
    index = {cell: i for i, cell in enumerate(cells)}
    n = len(cells)
    later: list[tuple[int, ...]] = []
    for i, cell in enumerate(cells):
        later.append(tuple(sorted(index[x] - i for x in neighbors(cell) if index.get(x, -1) > i)))

    # State: bitmask over scan offsets (bit k set => cell i+k already used
    # by a lozenge placed earlier).  Bit 0 refers to the cell being decided.
    states: dict[int, int] = {0: 1}
    for i in range(n):
        nxt: dict[int, int] = {}
        offs = later[i]
        for mask, ways in states.items():
            if mask & 1:
                key = mask >> 1
                nxt[key] = nxt.get(key, 0) + ways
                continue
            # Cell i is unmatched: it must pair with a later neighbour now.
            for d in offs:
                bit = 1 << d
                if mask & bit:
                    continue
                key = (mask | bit) >> 1
                nxt[key] = nxt.get(key, 0) + ways
        if len(nxt) > limit_states:
            raise ResourceLimit(
                f"frontier DP exceeded {limit_states} states at cell {i}/{n}"
            )
        states = nxt
        if not states:
            return 0
    return states.get(0, 0)


def count_matchings_generic(adj: dict, limit_states: int = DEFAULT_STATE_LIMIT) -> int:
    """Exact perfect-matching count of an arbitrary small graph.

    ``adj`` maps each vertex to an iterable of neighbours.  Branches on a
    minimum-degree vertex with memoization on the remaining vertex set, so
    it is an independent cross-check for ``count_tilings`` on region duals
    and the workhorse behind the condensation identity checks.
    """
    verts = sorted(adj, key=repr)
    pos = {v: i for i, v in enumerate(verts)}
    nbrs = [tuple(sorted({pos[u] for u in adj[v] if u in pos} - {pos[v]})) for v in verts]
    if len(verts) % 2:
        return 0
    full = (1 << len(verts)) - 1
    memo: dict[int, int] = {}

    def solve(remaining: int) -> int:
        if remaining == 0:
            return 1
        got = memo.get(remaining)
        if got is not None:
            return got
        # Pick the remaining vertex of minimum remaining degree.
        best_v, best_deg = -1, 1 << 30
        mask = remaining
        while mask:
            v = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            deg = sum(1 for u in nbrs[v] if remaining >> u & 1)
            if deg < best_deg:
                best_v, best_deg = v, deg
                if deg <= 1:
                    break
        if best_deg == 0:
            memo[remaining] = 0
            return 0
        total = 0
        for u in nbrs[best_v]:
            if remaining >> u & 1:
                total += solve(remaining & ~(1 << best_v) & ~(1 << u))
        if len(memo) >= limit_states:
            raise ResourceLimit(f"matching memo exceeded {limit_states} states")
        memo[remaining] = total
        return total

    return solve(full)


@dataclass
class CountReport:
    count: int
    states_hint: int = 0
