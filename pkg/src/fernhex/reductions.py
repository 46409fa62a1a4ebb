"""Extremal-case reductions: zero-triangle elimination and the minimal-y
bar/unbar pairing.

Both transforms preserve the exact tiling count (the test suite checks
this against the brute-force oracle on every instance it touches) and
never increase the induction parameter h = quasi-perimeter + x + z.
"""

from __future__ import annotations

from dataclasses import replace

from .ferns import FernSeq, fern_arrow, fern_bar, fern_prepend_zero
from .regions import RegionError, RegionSpec


class YNotMinimal(ValueError):
    pass


class NoReduction(ValueError):
    pass


def _tidy(seq: list[int]) -> list[int]:
    """Drop leading (0, 0) pairs, merge interior zeros, pop trailing zeros.

    These moves never change the built cell set: zero pairs occupy no
    cells and two triangles separated by a zero entry are the same cells
    as one merged triangle.
    """
    changed = True
    while changed:
        changed = False
        while len(seq) >= 2 and seq[0] == 0 and seq[1] == 0:
            seq = seq[2:]
            changed = True
        for i in range(1, len(seq)):
            if seq[i] == 0 and i + 1 < len(seq):
                seq = seq[:i - 1] + [seq[i - 1] + seq[i + 1]] + seq[i + 2:]
                changed = True
                break
    while seq and seq[-1] == 0:
        seq.pop()
    return seq


def _strip_step(seq: list[int], other_total: int, side: str,
                dr2: int) -> tuple[list[int], int] | None:
    """One boundary-strip step on a tidied side fern, or None.

    The leading (0, t) pair dissolves into forced lozenges along the
    adjacent hexagon side at the cost of a compensating y increase
    (oracle-pinned; the printed procedure keeps y fixed but fails every
    instance): y grows by t, except by t - 1 when a single unit triangle
    is all that remains.  Dissolving the whole fern keeps y but is only
    count-preserving for the left fern of upper/level regions or the
    right fern of lower/level ones, and only while the other fern is at
    least as long as t (so max(a, b) survives).
    """
    if not (len(seq) >= 2 and seq[0] == 0 and seq[1] > 0):
        return None
    t = seq[1]
    rest = _tidy(seq[2:])
    if not rest:
        side_ok = dr2 >= 0 if side == "left" else dr2 <= 0
        if not side_ok or other_total < t:
            return None
        return rest, 0
    if len(rest) == 1 and rest[0] == 1:
        return rest, t - 1
    return rest, t


def normalize_zero_triangles(spec: RegionSpec) -> RegionSpec:
    """Equal-count spec with positive side-fern entries (wherever the
    strip is count-preserving) and at most one leading zero in the middle
    fern."""
    dr2 = spec.offset2[1]
    left = _tidy(list(spec.left.entries))
    right = _tidy(list(spec.right.entries))
    middle = _tidy(list(spec.middle.entries))
    y = spec.y
    progress = True
    while progress:
        progress = False
        step = _strip_step(left, sum(right), "left", dr2)
        if step:
            left, dy = step
            y += dy
            progress = True
        step = _strip_step(right, sum(left), "right", dr2)
        if step:
            right, dy = step
            y += dy
            progress = True
    return replace(spec, y=y, left=FernSeq(tuple(left)),
                   middle=FernSeq(tuple(middle)), right=FernSeq(tuple(right)))


_E_SHIFT = {1: 4, 2: 5, 3: 6, 4: 1, 5: 2, 6: 3}          # i -> 3 + i (mod 6)
_FGK_SHIFT = {i: (i + 3) % 8 + 1 for i in range(1, 9)}   # i -> 4 + i (mod 8)


def _swapped_family(spec: RegionSpec, shift_position: bool) -> tuple[str, int]:
    base = spec.family[:-3] if spec.barred else spec.family
    family = base if spec.barred else base + "Bar"
    pos = spec.position
    if shift_position:
        pos = _E_SHIFT[pos] if base == "E" else _FGK_SHIFT[pos]
    return family, pos


def reduce_y_minimal(spec: RegionSpec) -> RegionSpec:
    """Equal-count spec of the paired bar/unbar family with smaller h.

    Applies when y sits at its minimum; the six cases split on whether the
    region is an upper or lower one (root above or below the center line)
    and on the order relation of the fern totals a, b against 2d.  At the
    overlap |a - b| = 2d both printed constructions exist on paper but only
    one may satisfy the target family's y-domain, so the other is the
    fallback.
    """
    if spec.y != spec.y_min:
        raise YNotMinimal(f"y={spec.y} but minimum is {spec.y_min} for {spec}")
    a, b = spec.left.total, spec.right.total
    dr2 = spec.offset2[1]
    two_d = abs(dr2)
    # Roots on the center line count as upper for a >= b and lower for
    # a < b, matching the case lists.
    lower = dr2 < 0 or (dr2 == 0 and a < b)
    tail_a = FernSeq(spec.left.entries[1:])
    tail_b = FernSeq(spec.right.entries[1:])
    a1 = spec.left.entries[0] if spec.left.entries else 0
    b1 = spec.right.entries[0] if spec.right.entries else 0

    if not lower:
        # Upper regions (all barred families and the unbarred ones with the
        # fern root at or above the center line).
        family, pos = _swapped_family(spec, shift_position=False)
        if a >= b:
            if spec.y != 0:
                # At d > 0 with a > b no boundary wedge collapses and the
                # paper states no reduction; only y = 0 is covered.
                raise NoReduction(
                    f"case 1a applies at y=0 only; {spec} has y={spec.y}")
            return RegionSpec(family, pos, spec.x, min(a1, a - b), spec.z,
                              tail_a, spec.middle, spec.right)
        case_1b = lambda: RegionSpec(
            family, pos, spec.x, min(b1, b - a) - two_d, spec.z,
            spec.left, fern_prepend_zero(spec.middle), tail_b)
        case_1c = lambda: RegionSpec(
            family, pos, spec.x, a - b, spec.z, tail_a, spec.middle, spec.right)
        first, second = (case_1b, case_1c) if b - a >= two_d else (case_1c, case_1b)
        try:
            return first()
        except RegionError:
            return second()

    family, pos = _swapped_family(spec, shift_position=True)
    if a <= b:
        if spec.y != 0:
            raise NoReduction(f"case 2a applies at y=0 only; {spec} has y={spec.y}")
        return RegionSpec(family, pos, spec.x, min(b1, b - a), spec.z,
                          tail_b, fern_bar(spec.middle), spec.left)
    # The printed 2b/2c displays reuse the upper-case fern lists; the
    # oracle shows the lower cases swap ferns the way 2a does: 2b sends
    # (a; c; b) to (b; arrow(c); a_2..) and 2c to (b_2..; bar(c); a).
    case_2b = lambda: RegionSpec(
        family, pos, spec.x, min(a1, a - b) - two_d, spec.z,
        spec.right, fern_arrow(spec.middle), tail_a)
    case_2c = lambda: RegionSpec(
        family, pos, spec.x, b - a, spec.z,
        tail_b, fern_bar(spec.middle), spec.left)
    first, second = (case_2b, case_2c) if a - b >= two_d else (case_2c, case_2b)
    try:
        return first()
    except RegionError:
        return second()
