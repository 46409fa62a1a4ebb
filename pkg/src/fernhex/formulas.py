"""Closed-form product formulas: prefactor functions, the dented-semihexagon
count, and the data-driven right-hand sides of the thirty tiling theorems.

All arithmetic happens in the exact hyperfactorial calculus; a successful
evaluation ends with the sqrt(pi) exponent at zero and an integer rational
part, which ``theorem_count`` asserts before returning a count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ferns import FernSeq
from .hyper import H, HalfInt, HyperValue, NegativeArgument
from .regions import RegionSpec


def _h2(v: int) -> HalfInt:
    """v/2 as an exact half-integer."""
    return HalfInt(v)


def p1(x: int, y: int, z: int, m: int) -> int:
    if x % 2 == 0:
        return (x + y) * (x + z) + 2 * x * m
    return (x + y) * (x + z) + 2 * (x + y + z + m) * m


def p2(x: int, y: int, z: int, m: int) -> int:
    # Odd branch: the printed last factor (x^2 + xy - 1) fails every
    # brute-force instance and breaks the y/z symmetry the even branch
    # has; (x^2 + yz - 1) matches the oracle exhaustively.
    core = ((x + y) ** 2 - 1) * ((x + z) ** 2 - 1)
    if x % 2 == 0:
        return core + 4 * x * m * (
            x * x + 2 * x * y + y * y + 2 * x * z + 3 * y * z + z * z
            + 2 * x * m + 3 * y * m + 3 * z * m + 2 * m * m - 1
        )
    return core + 4 * (x + y + z + m) * m * (x * x + y * z - 1)


def q1(x_even: bool, y: int, z: int, m: int) -> HalfInt:
    if x_even:
        return HalfInt(2 * m + y + z)
    return HalfInt(y + z)


def q2(x: int, y: int, z: int, m: int) -> int:
    if x % 2 == 0:
        return (x + z + 2 * m - 1) * ((z + 1) * (x + z - 1) + 2 * x * (m - 1)) \
            + (y + 1) * ((x + z) ** 2 + 4 * x * m - 1)
    return z * ((x + z + 2 * m) ** 2 - 1) + y * ((x + z + 2 * m) ** 2 - 4 * m * (x + m) - 1)


def _line_plain(x: int, y: int, z: int, m: int) -> HyperValue:
    return (H(m + x) * H(m + y) * H(m + z) * H(m + x + y + z)
            / H(m + x + y) / H(m + y + z) / H(m + z + x))


def _line_halves(x: int, y: int, z: int, m: int) -> HyperValue:
    hm = _h2(m)
    val = H(hm) * H(hm)
    for v in (x, y, z):
        val = val * H(_h2(v).floor()) * H(_h2(v).ceil())
        val = val / H(hm + _h2(v).floor()) / H(hm + _h2(v).ceil())
    return val


def _line_pair_sums(x: int, y: int, z: int, m: int) -> HyperValue:
    hm = _h2(m)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    return (H(hm + sxy.floor()) * H(hm + sxy.ceil())
            * H(hm + syz) * H(hm + syz)
            * H(hm + szx.floor()) * H(hm + szx.ceil())
            / H(hm + sxyz.floor()) / H(hm + sxyz.ceil()))


def phi(x: int, y: int, z: int, m: int) -> HyperValue:
    """Count formula for the hexagon (x, y+m, z, x+m, y, z+m) with an
    up-pointing m-hole one unit left of center."""
    poly = Fraction(p1(x, y, z, m), 4)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(poly) * _line_plain(x, y, z, m)
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(sxy + m + 1) / H(syz + m) / H(szx + m - 1))
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy - 1) / H(syz) / H(szx + 1))
    return val


def psi(x: int, y: int, z: int, m: int) -> HyperValue:
    """Counterpart of ``phi`` for the hole 3/2 units left of center.

    Despite the (x, z, y) subscript ordering in the conjecture display,
    the oracle fixes this function as the displayed body in plain
    (x, y, z) order, which is also how the theorems invoke it.
    """
    poly = Fraction(p2(x, y, z, m), 16)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(poly) * _line_plain(x, y, z, m)
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy.floor() - 1) / H(syz) / H(szx.ceil() + 1))
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(m + sxy.ceil() + 1) / H(m + syz) / H(m + szx.floor() - 1))
    return val


def psi_prime(x: int, y: int, z: int, m: int) -> HyperValue:
    poly = Fraction(p2(x, y, z, m), 16)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(poly) * _line_plain(x, y, z, m)
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy.ceil() + 1) / H(syz) / H(szx.floor() - 1))
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(m + sxy.floor() - 1) / H(m + syz) / H(m + szx.ceil() + 1))
    return val


def theta(x: int, y: int, z: int, m: int) -> HyperValue:
    # The last denominator is printed H((y+z)/2); the oracle demands
    # H((y+z)/2 - 1), restoring the complementary-argument pattern all
    # sibling functions follow.
    pref = q1(x % 2 == 0, y, z, m)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(Fraction(pref.twice, 2)) * _line_plain(x, y, z, m)
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(m + sxy.floor()) / H(m + syz + 1) / H(m + szx.floor()))
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy.ceil()) / H(syz - 1) / H(szx.ceil()))
    return val


def theta_prime(x: int, y: int, z: int, m: int) -> HyperValue:
    pref = q1(x % 2 == 0, y, z, m)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(Fraction(pref.twice, 2)) * _line_plain(x, y, z, m)
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(m + sxy.ceil()) / H(m + syz - 1) / H(m + szx.ceil()))
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy.floor()) / H(syz + 1) / H(szx.floor()))
    return val


def lambda_fn(x: int, y: int, z: int, m: int) -> HyperValue:
    poly = Fraction(q2(x, y, z, m), 8)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(poly) * _line_plain(x, y, z, m)
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(m + sxy.ceil()) / H(m + syz + 1) / H(m + szx.floor() - 1))
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy.floor()) / H(syz - 1) / H(szx.ceil() + 1))
    return val


def lambda_prime(x: int, y: int, z: int, m: int) -> HyperValue:
    poly = Fraction(q2(x, y, z, m), 8)
    sxy, syz, szx, sxyz = _h2(x + y), _h2(y + z), _h2(z + x), _h2(x + y + z)
    val = HyperValue(poly) * _line_plain(x, y, z, m)
    val = (val * H(m + sxyz.floor()) * H(m + sxyz.ceil())
           / H(m + sxy.floor()) / H(m + syz - 1) / H(m + szx.ceil() + 1))
    val = val * _line_halves(x, y, z, m)
    val = (val * _line_pair_sums(x, y, z, m)
           / H(sxy.ceil()) / H(syz + 1) / H(szx.floor() - 1))
    return val


PREFACTORS = {
    "phi": phi, "psi": psi, "psi_prime": psi_prime,
    "theta": theta, "theta_prime": theta_prime,
    "lambda": lambda_fn, "lambda_prime": lambda_prime,
}


def clp_count(seq) -> int:
    """Tilings of the dented semihexagon S(seq), by the product formula.

    The printed form of the formula misstates which parity class goes in
    the numerator; the convention fixed here (even gaps i <= j in the
    numerator, odd in the denominator, leading 1/H of the dent total) is
    the one that matches the brute-force oracle exhaustively.
    """
    entries = [int(v) for v in seq]
    if any(v < 0 for v in entries):
        raise ValueError("dent sequence entries must be nonnegative")
    if len(entries) % 2 == 0 and entries:
        entries = entries[:-1]
    if not entries:
        return 1
    k = len(entries)
    prefix = [0]
    for v in entries:
        prefix.append(prefix[-1] + v)

    def seg(i: int, j: int) -> int:
        # a_i + ... + a_j, 1-based inclusive
        return prefix[j] - prefix[i - 1]

    val = HyperValue(Fraction(1)) / H(sum(entries[0::2]))
    for i in range(1, k + 1):
        for j in range(i, k + 1):
            if (j - i) % 2 == 0:
                val = val * H(seg(i, j))
            else:
                val = val / H(seg(i, j))
    return val.to_count()


# --- Theorem rows -----------------------------------------------------------

# Argument expressions are (coef_x, coef_y, coef_z, coef_maxab, const); the
# gap-like arguments of the trailing hyperfactorial blocks are ("floor" |
# "ceil" | "half", shift) applied to (x+z)/2.  Shifts in the B/C blocks are
# written against M = max(a,b), U = M - o_a + o_b + o_c, V = M + o_a - o_b
# + e_c for the unbarred rows and W1 = o_a + o_b + o_c, W2 = |a-b| + e_a +
# e_b + e_c + 2y for the barred ones, exactly as the theorems print them.

X = (1, 0, 0, 0, 0)
Y2ZM = (0, 2, 1, 2, 0)      # 2y + z + 2*max(a,b)
Z = (0, 0, 1, 0, 0)


def _shift(expr, delta):
    return expr[:4] + (expr[4] + delta,)


@dataclass(frozen=True)
class TheoremRow:
    family: str
    position: int
    prefactor: str
    pre_args: tuple
    hc_g: tuple
    a_arg: tuple
    b_shifts: tuple
    c_shifts: tuple
    note: str = ""


THEOREM_ROWS: dict[tuple[str, int], TheoremRow] = {}


def _row(family, position, prefactor, pre_args, hc_g, a_arg, b_shifts, c_shifts, note=""):
    THEOREM_ROWS[(family, position)] = TheoremRow(
        family, position, prefactor, pre_args, hc_g, a_arg, b_shifts, c_shifts, note)


_row("E", 1, "phi", (X, Y2ZM, Z), ("half", -1), ("half", -1), (0, 0, 0, 0), (0, 0, 0, 0))
_row("E", 2, "phi", (_shift(Y2ZM, 2), X, Z), ("half", 0), ("half", 0), (2, 0, 0, 2), (0, 2, 0, 2))
_row("E", 6, "phi", (Z, _shift(Y2ZM, 2), X), ("half", -1), ("half", 1), (0, 2, 2, 0), (2, 0, 0, 2))
_row("F", 1, "theta", (X, _shift(Y2ZM, 2), Z), ("floor", 0), ("ceil", 1), (0, 2, 2, 0), (2, 0, 0, 2))
_row("F", 2, "lambda", (X, _shift(Y2ZM, 2), Z), ("floor", -1), ("floor", 1), (0, 2, 2, 0), (2, 0, 0, 2))
_row("F", 3, "psi", (X, Y2ZM, Z), ("floor", -1), ("floor", -1), (0, 0, 0, 0), (0, 0, 0, 0))
_row("F", 4, "lambda_prime", (X, Z, _shift(Y2ZM, 2)), ("floor", 0), ("floor", 0), (2, 0, 0, 2), (0, 2, 0, 2))
_row("G", 1, "theta_prime", (_shift(Y2ZM, 1), Z, X), ("half", -1), ("half", 0), (0, 1, 1, 0), (1, 0, 1, 0))
_row("G", 2, "lambda_prime", (_shift(Y2ZM, 1), Z, X), ("half", -1), ("half", -1), (1, 0, 0, 1), (0, 1, 1, 0))
_row("G", 3, "psi_prime", (_shift(Y2ZM, 3), Z, X), ("half", 0), ("half", 0), (3, 0, 0, 3), (0, 3, 3, 0))
_row("G", 4, "lambda", (_shift(Y2ZM, 3), X, Z), ("half", 1), ("half", 1), (3, 0, 0, 3), (0, 3, 3, 0),
     note="printed prefactor subscripts (z, ., x) fail; oracle fixes (., x, z)")
_row("K", 1, "theta_prime", (Z, X, _shift(Y2ZM, 1)), ("ceil", 0), ("ceil", 1), (0, 1, 1, 0), (1, 0, 1, 0))
_row("K", 2, "lambda_prime", (Z, X, _shift(Y2ZM, 3)), ("floor", 0), ("ceil", 2), (0, 3, 3, 0), (3, 0, 3, 0))
_row("K", 3, "psi_prime", (Z, X, _shift(Y2ZM, 3)), ("floor", -1), ("ceil", 1), (0, 3, 3, 0), (3, 0, 3, 0))
_row("K", 4, "lambda", (Z, _shift(Y2ZM, 1), X), ("floor", -1), ("floor", 0), (0, 1, 1, 0), (1, 0, 1, 0),
     note="printed prefactor subscripts (., x, z) fail; oracle fixes (z, ., x)")
_row("EBar", 1, "phi", (X, Y2ZM, Z), ("half", -1), ("half", -1), (0, 0, 0), (0, 0))
_row("EBar", 2, "phi", (_shift(Y2ZM, 2), X, Z), ("half", 0), ("half", 0), (2, 0, 2), (2, 2))
_row("EBar", 3, "phi", (Z, _shift(Y2ZM, 2), X), ("half", -1), ("half", 1), (0, 2, 2), (2, 2),
     note="printed prefactor subscripts (z, x, .) fail; oracle fixes (z, ., x)")
_row("FBar", 3, "psi", (X, Y2ZM, Z), ("floor", -1), ("floor", -1), (0, 0, 0), (0, 0),
     note="printed prefactor subscripts (z, ., x) fail; oracle fixes (x, ., z)")
_row("FBar", 4, "lambda_prime", (X, Z, _shift(Y2ZM, 2)), ("floor", 0), ("floor", 0), (2, 0, 2), (2, 2))
_row("FBar", 5, "theta_prime", (X, _shift(Y2ZM, 2), Z), ("ceil", 0), ("ceil", 0), (2, 0, 2), (2, 2),
     note="oracle: bare (x+z)/2 arguments resolve as ceilings; B-shift on the c-free term")
_row("FBar", 6, "lambda_prime", (X, _shift(Y2ZM, 2), Z), ("ceil", 1), ("ceil", 1), (2, 0, 2), (2, 2),
     note="oracle: H(c + gap) block uses gap1 = ceil+1, not the printed (x+z)/2 - 1; B-shift on the c-free term")
_row("GBar", 2, "lambda_prime", (_shift(Y2ZM, 1), Z, X), ("half", -1), ("half", -1), (1, 0, 1), (1, 1),
     note="printed C-block leaves W2 unshifted; oracle fixes W2+1")
_row("GBar", 3, "psi_prime", (_shift(Y2ZM, 3), Z, X), ("half", 0), ("half", 0), (3, 0, 3), (3, 3))
_row("GBar", 4, "lambda", (_shift(Y2ZM, 3), X, Z), ("half", 1), ("half", 1), (3, 0, 3), (3, 3),
     note="printed prefactor subscripts (z, ., x) fail; oracle fixes (., x, z)")
_row("GBar", 5, "theta", (_shift(Y2ZM, 1), Z, X), ("half", 1), ("half", 1), (1, 0, 1), (1, 1),
     note="oracle: H(c + gap) uses gap1 = (x+z)/2 + 1 and the A-argument gains 1; B-shift on the c-free term")
_row("KBar", 5, "theta", (Z, X, _shift(Y2ZM, 1)), ("floor", 0), ("floor", 0), (1, 0, 1), (1, 1),
     note="oracle: Hc and A arguments are floors (= gap1), not the printed ceilings; B-shift on the c-free term")
_row("KBar", 6, "lambda", (Z, X, _shift(Y2ZM, 3)), ("ceil", 0), ("ceil", 0), (3, 0, 3), (3, 3),
     note="oracle: Hc argument is gap1 = ceil, A-argument ceil (printed ceil+2); B-shift on the c-free term")
_row("KBar", 7, "psi", (Z, _shift(Y2ZM, 3), X), ("floor", -1), ("ceil", 1), (0, 3, 3), (3, 3),
     note="psi in body order; printed subscripts (z, x, .) correspond to (z, ., x)")
_row("KBar", 8, "lambda_prime", (Z, _shift(Y2ZM, 1), X), ("ceil", 1), ("ceil", 1), (1, 0, 1), (1, 1),
     note="printed prefactor subscripts (., x, z) fail; oracle fixes (z, ., x), Hc/A use gap1 = ceil+1")


class NoTheoremRow(KeyError):
    pass


def fern_gaps(spec: RegionSpec) -> tuple[int, int]:
    """Horizontal gaps between the left/middle and middle/right ferns."""
    dc2, dr2 = spec.offset2
    j = spec.aux_shift
    if spec.barred:
        g1 = (spec.x + spec.z + j + dc2) // 2
    else:
        g1 = (spec.x + spec.z + dc2 + dr2) // 2
    g2 = (spec.x + spec.z - dc2 - dr2) // 2
    return g1, g2


_DENT, _GAP = True, False


def _coalesce(runs) -> list[int]:
    merged: list[list] = []
    for size, kind in runs:
        if merged and merged[-1][1] == kind:
            merged[-1][0] += size
        else:
            merged.append([size, kind])
    if merged and merged[0][1] == _GAP:
        merged.insert(0, [0, _DENT])
    return [size for size, _ in merged]


def s_lists(spec: RegionSpec) -> tuple[list[int], list[int]]:
    """The two dent sequences whose semihexagon counts enter the formula.

    The first list reads the fern line from the upper half (up-pointing
    pieces are dents), the second from the lower half.  Wedge dents at the
    west/east ends carry the position-dependent shifts.
    """
    g1, g2 = fern_gaps(spec)
    at, _, bt = spec.totals
    dr2 = spec.offset2[1]
    prefix = spec.y + max(bt - at, 0) + max(-dr2, 0)
    suffix = spec.y + max(at - bt, 0) + max(dr2, 0)

    def fern_runs(up_is_dent: bool) -> list:
        runs = []
        left_first_up = spec.barred
        for i, v in enumerate(spec.left):
            up = left_first_up if i % 2 == 0 else not left_first_up
            runs.append([v, up == up_is_dent])
        runs.append([g1, _GAP])
        for i, v in enumerate(spec.middle):
            up = i % 2 == 0
            runs.append([v, up == up_is_dent])
        runs.append([g2, _GAP])
        for i, v in enumerate(reversed(spec.right.entries)):
            j = len(spec.right) - 1 - i  # geometric order, b_1 rightmost
            up = j % 2 == 0
            runs.append([v, up == up_is_dent])
        return runs

    upper = fern_runs(up_is_dent=True)
    lower = fern_runs(up_is_dent=False)
    if spec.barred:
        lower = [[prefix, _DENT]] + lower + [[suffix, _DENT]]
    else:
        upper = [[prefix, _DENT]] + upper
        lower = lower + [[suffix, _DENT]]
    return _coalesce(upper), _coalesce(lower)


def s_list_upper_bumped(spec: RegionSpec) -> list[int]:
    """Upper-piece dent sequence for the x=0 base-case split.

    The fern gaps turn into runs of unit dents: cutting around the bumps
    removes one up-triangle per gap column from the upper piece.
    """
    g1, g2 = fern_gaps(spec)
    at, _, bt = spec.totals
    dr2 = spec.offset2[1]
    runs = []
    if not spec.barred:
        runs.append([spec.y + max(bt - at, 0) + max(-dr2, 0), _DENT])
    left_first_up = spec.barred
    for i, v in enumerate(spec.left):
        up = left_first_up if i % 2 == 0 else not left_first_up
        runs.append([v, up])
    for _ in range(g1):
        runs.extend([[0, _GAP], [1, _DENT]])
    runs.append([0, _GAP])
    for i, v in enumerate(spec.middle):
        runs.append([v, i % 2 == 0])
    for _ in range(g2):
        runs.extend([[0, _GAP], [1, _DENT]])
    runs.append([0, _GAP])
    for i, v in enumerate(reversed(spec.right.entries)):
        j = len(spec.right) - 1 - i
        runs.append([v, j % 2 == 0])
    return _coalesce(runs)


def _gap_value(tag: tuple, x: int, z: int) -> HalfInt:
    base, shift = tag
    s = _h2(x + z)
    if base == "floor":
        return HalfInt.of(s.floor() + shift)
    if base == "ceil":
        return HalfInt.of(s.ceil() + shift)
    return s + shift


def _eval_arg(expr: tuple, spec: RegionSpec) -> int:
    cx, cy, cz, cm, const = expr
    at, _, bt = spec.totals
    return cx * spec.x + cy * spec.y + cz * spec.z + cm * max(at, bt) + const


def theorem_value(spec: RegionSpec) -> HyperValue:
    """Exact closed-form value for ``spec`` (before integer conversion)."""
    row = THEOREM_ROWS.get((spec.family, spec.position))
    if row is None:
        raise NoTheoremRow(f"no theorem for {spec.family}({spec.position})")
    a, c, b = spec.left, spec.middle, spec.right
    at, ct, bt = spec.totals
    x, y, z = spec.x, spec.y, spec.z
    M = max(at, bt)

    args = [_eval_arg(e, spec) for e in row.pre_args]
    val = PREFACTORS[row.prefactor](*args, ct)
    if val.rat == 0:
        return val

    s1, s2 = s_lists(spec)
    val = val * clp_count(s1) * clp_count(s2)

    g = _gap_value(row.hc_g, x, z)
    val = val * H(g + ct) / H(ct) / H(g)
    aa = _gap_value(row.a_arg, x, z)
    val = val * H(aa + M + y) / H(aa + M + ct + y)

    if not spec.barred:
        U = M - a.odd_sum + b.odd_sum + c.odd_sum
        V = M + a.odd_sum - b.odd_sum + c.even_sum
        b1, b2, b3, b4 = row.b_shifts
        val = (val * H(M + y + z + b1) * H(M + ct + y + z + b2)
               / H(U + y + z + b3) / H(V + y + z + b4))
        g1, g2, d1, d2 = row.c_shifts
        val = (val * H(U + y + g1) * H(V + y + g2)
               / H(M + y + d1) / H(M + y + d2))
    else:
        W1 = a.odd_sum + b.odd_sum + c.odd_sum
        W2 = abs(at - bt) + a.even_sum + b.even_sum + c.even_sum + 2 * y
        b1, b2, b3 = row.b_shifts
        val = (val * H(M + y + z + b1) * H(M + ct + y + z + b2)
               / H(W1 + z) / H(W2 + z + b3))
        g1, d1 = row.c_shifts
        val = (val * H(W1) * H(W2 + g1)
               / H(M + y) / H(M + y + d1))
    return val


def theorem_count(spec: RegionSpec) -> int:
    """The closed-form tiling count; raises if pi fails to cancel."""
    return theorem_value(spec).to_count()
