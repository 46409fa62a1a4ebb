"""Symbolic region specifications and their explicit cell-set construction.

Every region family is built the same way: an auxiliary hexagon with sides
(x, z+j, z, x, z+j, z) is grown outward by six family-specific pushing
distances into the base hexagon, and three ferns are deleted along a common
horizontal lattice line.  The middle fern's root sits at a small offset
from the auxiliary hexagon's center; the offset table below encodes every
off-central position together with the central (position 0) variants the
condensation recurrences need.

Support-plane coordinates make this exact: a hexagon is the set of cells
with C_w <= c <= C_e, R_bot <= r <= R_top, S_sw <= c + r <= S_ne, and
pushing a side is a unit shift of one support value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .ferns import EMPTY_FERN, FernSeq, fern_bar, fern_prepend_zero
from .lattice import TriCell, TriRegion, triangle_down, triangle_up

FAMILIES = ("E", "F", "G", "K", "EBar", "FBar", "GBar", "KBar")

_CLASS = {"E": "E", "EBar": "E", "F": "F", "FBar": "F",
          "G": "G", "GBar": "G", "K": "K", "KBar": "K"}

# Middle-fern root offset from the auxiliary hexagon's center, doubled:
# (2*dcol, 2*drow).  The auxiliary hexagon's shift j always equals |2*drow|.
_POSITIONS: dict[tuple[str, int], tuple[int, int]] = {
    ("E", 0): (0, 0),
    ("E", 1): (-2, 0), ("E", 2): (-2, 2), ("E", 3): (0, 2),
    ("E", 4): (2, 0), ("E", 5): (2, -2), ("E", 6): (0, -2),
    ("F", 0): (-1, 0),
    ("F", 1): (1, -2), ("F", 2): (-1, -2), ("F", 3): (-3, 0),
    ("F", 4): (-3, 2), ("F", 5): (-1, 2), ("F", 6): (1, 2),
    ("F", 7): (3, 0), ("F", 8): (3, -2),
    ("G", 0): (-1, 1),
    ("G", 1): (-1, -1), ("G", 2): (-3, 1), ("G", 3): (-3, 3),
    ("G", 4): (-1, 3), ("G", 5): (1, 1), ("G", 6): (3, -1),
    ("G", 7): (3, -3), ("G", 8): (1, -3),
    ("K", 0): (0, -1),       # R-type central root, 1/2 unit below center
    ("KBar", 0): (0, 1),     # Q-type central root, 1/2 unit above center
    ("K", 1): (2, -1), ("K", 2): (2, -3), ("K", 3): (0, -3),
    ("K", 4): (-2, -1), ("K", 5): (-2, 1), ("K", 6): (-2, 3),
    ("K", 7): (0, 3), ("K", 8): (2, 1),
}

_ALLOWED_POSITIONS = {
    "E": range(0, 7), "F": range(0, 9), "G": range(0, 9), "K": range(0, 9),
    "EBar": (0, 1, 2, 3, 4), "FBar": (0, 3, 4, 5, 6, 7),
    "GBar": (0, 2, 3, 4, 5), "KBar": (0, 5, 6, 7, 8),
}


class RegionError(ValueError):
    pass


class ParityViolation(RegionError):
    pass


class YBelowMinimum(RegionError):
    pass


class FernOverflow(RegionError):
    pass


class PositionUnsupported(RegionError):
    pass


@dataclass(frozen=True)
class RegionSpec:
    family: str
    position: int
    x: int
    y: int
    z: int
    left: FernSeq = EMPTY_FERN
    middle: FernSeq = EMPTY_FERN
    right: FernSeq = EMPTY_FERN

    def __post_init__(self):
        object.__setattr__(self, "left", FernSeq.of(self.left))
        object.__setattr__(self, "middle", FernSeq.of(self.middle))
        object.__setattr__(self, "right", FernSeq.of(self.right))
        if self.family not in FAMILIES:
            raise PositionUnsupported(f"unknown family {self.family!r}")
        if self.position not in _ALLOWED_POSITIONS[self.family]:
            raise PositionUnsupported(f"{self.family} has no position {self.position}")
        if self.x < 0 or self.z < 0:
            raise RegionError("x and z must be nonnegative")
        cls = _CLASS[self.family]
        same_parity = (self.x - self.z) % 2 == 0
        if cls in ("E", "G") and not same_parity:
            raise ParityViolation(f"{self.family} needs x = z (mod 2): x={self.x} z={self.z}")
        if cls in ("F", "K") and same_parity:
            raise ParityViolation(f"{self.family} needs x != z (mod 2): x={self.x} z={self.z}")
        if self.y < self.y_min:
            raise YBelowMinimum(
                f"{self.family}({self.position}) needs y >= {self.y_min}, got {self.y}")

    @property
    def barred(self) -> bool:
        return self.family.endswith("Bar")

    @property
    def offset2(self) -> tuple[int, int]:
        """(2*dcol, 2*drow) of the middle fern root from the aux center."""
        key = ("KBar", 0) if (self.family, self.position) == ("KBar", 0) else \
            (_CLASS[self.family], self.position)
        return _POSITIONS[key]

    @property
    def aux_shift(self) -> int:
        """j in the auxiliary hexagon sides (x, z+j, z, x, z+j, z)."""
        return abs(self.offset2[1])

    @property
    def y_min(self) -> int:
        # Root d = |dr2|/2 units above center: y >= max(a-b, -2d); below:
        # y >= max(b-a, -2d); on the center line: y >= 0.
        a, b = self.left.total, self.right.total
        dr2 = self.offset2[1]
        if dr2 > 0:
            return max(a - b, -dr2)
        if dr2 < 0:
            return max(b - a, dr2)
        return 0

    @property
    def totals(self) -> tuple[int, int, int]:
        return self.left.total, self.middle.total, self.right.total

    def text(self) -> str:
        return format_spec(self)

    def __str__(self) -> str:
        return format_spec(self)


def _push_distances(spec: RegionSpec) -> dict[str, int]:
    a, c, b = spec.left, spec.middle, spec.right
    at, bt, ct = a.total, b.total, c.total
    y = spec.y
    up_excess = max(at - bt, 0)
    down_excess = max(bt - at, 0)
    if not spec.barred:
        return {
            "N": y + a.even_sum + b.odd_sum + c.odd_sum + down_excess,
            "NE": bt + ct,
            "SE": y + bt + ct + up_excess,
            "S": y + a.odd_sum + b.even_sum + c.even_sum + up_excess,
            "SW": at,
            "NW": y + at + down_excess,
        }
    return {
        "N": a.odd_sum + b.odd_sum + c.odd_sum,
        "NE": bt + ct,
        "SE": bt + ct + y + up_excess,
        "S": a.even_sum + b.even_sum + c.even_sum + 2 * y + abs(at - bt),
        "SW": at + y + down_excess,
        "NW": at,
    }


@dataclass(frozen=True)
class _Support:
    c_w: int
    c_e: int
    r_bot: int
    r_top: int
    s_sw: int
    s_ne: int

    def side_lengths(self) -> dict[str, int]:
        return {
            "N": self.s_ne - self.r_top - self.c_w,
            "NE": self.r_top - (self.s_ne - self.c_e),
            "SE": (self.s_ne - self.c_e) - self.r_bot,
            "S": self.c_e - (self.s_sw - self.r_bot),
            "SW": (self.s_sw - self.c_w) - self.r_bot,
            "NW": self.r_top - (self.s_sw - self.c_w),
        }

    def cells(self) -> set[TriCell]:
        out: set[TriCell] = set()
        for r in range(self.r_bot, self.r_top):
            lo = max(self.c_w, self.s_sw - r - 1)
            for c in range(lo, self.c_e):
                if self.s_sw <= c + r <= self.s_ne - 1:
                    out.add(TriCell(r, c, True))
                if self.s_sw - 1 <= c + r <= self.s_ne - 2:
                    out.add(TriCell(r, c, False))
        return out

    def contains(self, cell: TriCell) -> bool:
        r, c, up = cell
        if not (self.r_bot <= r <= self.r_top - 1 and self.c_w <= c <= self.c_e - 1):
            return False
        if up:
            return self.s_sw <= c + r <= self.s_ne - 1
        return self.s_sw - 1 <= c + r <= self.s_ne - 2


def _fern_cells(root_col: int, row: int, fern: FernSeq, first_up: bool,
                right_to_left: bool = False) -> set[TriCell]:
    cells: set[TriCell] = set()
    cursor = root_col
    for idx, size in enumerate(fern):
        up = first_up if idx % 2 == 0 else not first_up
        if right_to_left:
            start = cursor - size
            cells |= triangle_up(row, start, size) if up else triangle_down(row, start, size)
            cursor -= size
        else:
            cells |= triangle_up(row, cursor, size) if up else triangle_down(row, cursor, size)
            cursor += size
    return cells


def build_region(spec: RegionSpec) -> TriRegion:
    """Explicit cell set of the region described by ``spec``.

    The base hexagon's west vertex ends up at the origin.  The returned
    region's ``meta`` records the fern line's row and the two fern gaps,
    which the region-splitting tests reuse.
    """
    j = spec.aux_shift
    x, z = spec.x, spec.z
    dc2, dr2 = spec.offset2
    # Negative y can turn individual pushing distances negative while the
    # final hexagon stays valid, so only the resulting side lengths are
    # checked.
    push = _push_distances(spec)

    # Auxiliary hexagon with west vertex at (0, 0).
    base = _Support(
        c_w=-push["NW"],
        c_e=x + z + j + push["SE"],
        r_bot=-(z + j) - push["S"],
        r_top=z + push["N"],
        s_sw=-push["SW"],
        s_ne=x + z + push["NE"],
    )
    sides = base.side_lengths()
    if min(sides.values()) < 0:
        raise FernOverflow(f"degenerate base hexagon {sides} for {spec}")

    if (x + z + j + dc2) % 2 or (dr2 - j) % 2:
        raise ParityViolation(f"fern root of {spec} is not a lattice point")
    root_col = (x + z + j + dc2) // 2
    line_row = (dr2 - j) // 2

    at, ct, bt = spec.totals
    left_anchor = base.c_w if spec.barred else base.s_sw - line_row
    right_anchor = base.s_ne - line_row
    gap1 = root_col - (left_anchor + at)
    gap2 = (right_anchor - bt) - (root_col + ct)
    if gap1 < 0 or gap2 < 0:
        raise FernOverflow(f"ferns overlap (gaps {gap1}, {gap2}) in {spec}")

    left = _fern_cells(left_anchor, line_row, spec.left, first_up=spec.barred)
    middle = _fern_cells(root_col, line_row, spec.middle, first_up=True)
    right = _fern_cells(right_anchor, line_row, spec.right, first_up=True,
                        right_to_left=True)
    holes = left | middle | right
    if len(holes) != len(left) + len(middle) + len(right):
        raise FernOverflow(f"ferns overlap in {spec}")
    cells = base.cells()
    if not holes <= cells:
        raise FernOverflow(f"ferns stick out of the base hexagon in {spec}")

    west_row = base.s_sw - base.c_w
    dr, dc = -west_row, -base.c_w
    meta = {
        "spec": spec,
        "line_row": line_row + dr,
        "gap1": gap1,
        "gap2": gap2,
        "quasi_perimeter": sum(sides.values()),
    }
    return TriRegion(frozenset(t.translated(dr, dc) for t in cells - holes), meta)


CENTRAL_NAMES = {
    "R_center": ("E", 0), "R_left": ("F", 0), "R_nw": ("G", 0), "R_sw": ("K", 0),
    "Q_center": ("EBar", 0), "Q_left": ("FBar", 0), "Q_nw": ("GBar", 0),
    "Q_ne": ("KBar", 0),
}


def central_spec(name: str, x: int, y: int, z: int, a=EMPTY_FERN, c=EMPTY_FERN,
                 b=EMPTY_FERN) -> RegionSpec:
    """RegionSpec for one of the central R/Q families used by recurrences."""
    family, pos = CENTRAL_NAMES[name]
    return RegionSpec(family, pos, x, y, z, FernSeq.of(a), FernSeq.of(c), FernSeq.of(b))


def build_central(name: str, x: int, y: int, z: int, a=EMPTY_FERN, c=EMPTY_FERN,
                  b=EMPTY_FERN) -> TriRegion:
    return build_region(central_spec(name, x, y, z, a, c, b))


_CORED_OFFSETS = {
    # variant: (2*dcol, 2*drow, hole_up, parity requirement)
    "left1": (-2, 0, True, "all_same"),
    "left3half": (-3, 0, True, "x_differs"),
    "pos1": (1, -2, False, "x_differs"),
    "pos2": (-1, -2, False, "x_differs"),
    "pos3": (-3, 0, False, "x_differs"),
}


def build_cored_hexagon(x: int, y: int, z: int, m: int, offset: str = "center") -> TriRegion:
    """Cored hexagon grown from the auxiliary hexagon (x, y, z, x, y, z).

    ``offset`` selects the hole placement: "center" puts an up-pointing
    hole at the lattice point closest to the auxiliary hexagon's center
    (four parity cases), "left1" and "left3half" put it 1 and 3/2 units to
    the left, and "pos1"/"pos2"/"pos3" place a *down*-pointing hole at the
    corresponding off-central position.  Up-hole variants use the base
    hexagon (x, y+m, z, x+m, y, z+m); down-hole variants its mirror
    (x+m, y, z+m, x, y+m, z), which carries the matching down-excess.
    """
    if min(x, y, z, m) < 0:
        raise RegionError("parameters must be nonnegative")
    hole_up = offset == "center" or _CORED_OFFSETS.get(offset, (0, 0, True, ""))[2]
    if hole_up:
        base = _Support(c_w=0, c_e=x + y + m, r_bot=-y, r_top=z + m, s_sw=0, s_ne=x + z + m)
    else:
        base = _Support(c_w=-m, c_e=x + y, r_bot=-y - m, r_top=z, s_sw=-m, s_ne=x + z)
    ctr2 = (x + y, z - y)  # doubled center coordinates of the auxiliary hexagon
    if offset == "center":
        if ctr2[0] % 2 == 0 and ctr2[1] % 2 == 0:
            d2 = (0, 0)
        elif ctr2[0] % 2 and ctr2[1] % 2 == 0:
            d2 = (-1, 0)       # x odd-one-out: 1/2 unit left
        elif ctr2[0] % 2 and ctr2[1] % 2:
            d2 = (-1, 1)       # y odd-one-out: 1/2 unit northwest
        else:
            d2 = (0, -1)       # z odd-one-out: 1/2 unit southwest
    else:
        try:
            dc2, dr2, _, parity = _CORED_OFFSETS[offset]
        except KeyError:
            raise PositionUnsupported(f"unknown cored-hexagon offset {offset!r}") from None
        d2 = (dc2, dr2)
        if parity == "all_same" and (ctr2[0] % 2 or ctr2[1] % 2):
            raise ParityViolation(f"offset {offset} needs x = y = z (mod 2)")
    hc2, hr2 = ctr2[0] + d2[0], ctr2[1] + d2[1]
    if not hole_up:
        # A down-pointing hole is anchored by the right end of its top
        # edge (the 180-degree image of an up-hole's anchor), so its
        # top-left corner sits m units further left.
        hc2 -= 2 * m
    if hc2 % 2 or hr2 % 2:
        raise ParityViolation(f"hole corner not a lattice point for offset {offset!r}")
    hc, hr = hc2 // 2, hr2 // 2
    hole = triangle_up(hr, hc, m) if hole_up else triangle_down(hr, hc, m)
    cells = base.cells()
    if not hole <= cells:
        raise FernOverflow(f"hole sticks out of hexagon ({x},{y},{z},{m},{offset})")
    return TriRegion(frozenset(cells - hole),
                     {"cored": (x, y, z, m, offset), "line_row": hr})


def build_hexagon(a: int, b: int, c: int) -> TriRegion:
    """Plain hexagon with side lengths (a, b, c, a, b, c), north side first."""
    return build_cored_hexagon(a, b, c, 0, "center")


def build_dented_semihexagon(seq) -> TriRegion:
    """Upper half-hexagon with up-pointing dents along the base.

    ``seq`` lists dent sizes at odd positions and the gaps between them at
    even positions; the trapezoid has base odd_sum+even_sum, top even_sum,
    and height odd_sum.
    """
    entries = tuple(int(v) for v in seq)
    if any(v < 0 for v in entries):
        raise RegionError("dent sequence entries must be nonnegative")
    o = sum(entries[0::2])
    e = sum(entries[1::2])
    trap = _Support(c_w=0, c_e=o + e, r_bot=0, r_top=o, s_sw=0, s_ne=o + e)
    cells = trap.cells()
    cursor = 0
    for idx, size in enumerate(entries):
        if idx % 2 == 0:
            dent = triangle_up(0, cursor, size)
            if not dent <= cells:
                raise FernOverflow(f"dent {idx} sticks out in S{entries}")
            cells -= dent
        cursor += size
    return TriRegion(frozenset(cells), {"dented": entries})


_SPEC_RE = re.compile(
    r"^\s*(?P<family>[^:\s]+):(?P<pos>\d+)\s+"
    r"x=(?P<x>-?\d+)\s*,\s*y=(?P<y>-?\d+)\s*,\s*z=(?P<z>-?\d+)\s+"
    r"a=(?P<a>[\d,\s]*)\s+c=(?P<c>[\d,\s]*)\s+b=(?P<b>[\d,\s]*)\s*$"
)

# Unicode macron spellings of the barred families are accepted on input.
_FAMILY_ALIASES = {
    "e": "E", "f": "F", "g": "G", "k": "K",
    "ebar": "EBar", "fbar": "FBar", "gbar": "GBar", "kbar": "KBar",
    "ē": "EBar", "Ē": "EBar", "ḡ": "GBar", "Ḡ": "GBar",
}


def _parse_fern(text: str) -> FernSeq:
    text = text.strip()
    if not text:
        return EMPTY_FERN
    return FernSeq.of(int(v) for v in text.split(","))


def parse_spec(text: str) -> RegionSpec:
    """Parse ``FAMILY:POSITION x=..,y=..,z=.. a=.. c=.. b=..`` spec text."""
    m = _SPEC_RE.match(text)
    if not m:
        raise RegionError(f"cannot parse region spec {text!r}")
    raw = m.group("family")
    family = _FAMILY_ALIASES.get(raw.lower())
    if family is None:
        # Combining-macron forms like "K̄" collapse to <letter>Bar.
        stripped = "".join(ch for ch in raw if ch.isascii()).lower()
        if stripped in ("e", "f", "g", "k") and len(raw) > len(stripped):
            family = stripped.upper() + "Bar"
        else:
            raise RegionError(f"unknown family {raw!r}")
    return RegionSpec(
        family, int(m.group("pos")),
        int(m.group("x")), int(m.group("y")), int(m.group("z")),
        _parse_fern(m.group("a")), _parse_fern(m.group("c")), _parse_fern(m.group("b")),
    )


def format_spec(spec: RegionSpec) -> str:
    def fern_text(f: FernSeq) -> str:
        return ",".join(str(v) for v in f.entries)

    return (f"{spec.family}:{spec.position} x={spec.x},y={spec.y},z={spec.z} "
            f"a={fern_text(spec.left)} c={fern_text(spec.middle)} b={fern_text(spec.right)}")
