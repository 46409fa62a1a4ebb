"""Exact hyperfactorial calculus.

The hyperfactorial H is defined on nonnegative half-integers:

    H(n)       = prod_{k=0}^{n-1} k!                      (n integer)
    H(k + 1/2) = prod_{j=0}^{k} Gamma(j + 1/2)            (half-integer)

with Gamma(j + 1/2) = (2j)!/(4^j j!) * sqrt(pi).  Values are represented
exactly as a reduced rational times an integer power of sqrt(pi), so the
product formulas can be assembled without ever touching floating point;
a valid tiling count must come out with the sqrt(pi) exponent zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial


class NegativeArgument(ValueError):
    """Raised when H is applied to a negative half-integer."""


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact element of (1/2)Z, stored as twice its value."""

    twice: int

    @staticmethod
    def of(value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return HalfInt(2 * value)
        raise TypeError(f"cannot make HalfInt from {value!r}")

    def __add__(self, other) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other) -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def floor(self) -> int:
        return self.twice // 2

    def ceil(self) -> int:
        return -((-self.twice) // 2)

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __repr__(self) -> str:
        return str(self.twice // 2) if self.is_integer else f"{self.twice}/2"


def half(value) -> HalfInt:
    """value/2 as an exact HalfInt (value may be int or HalfInt)."""
    v = HalfInt.of(value)
    if v.twice % 2:
        raise ValueError(f"cannot halve {v} within HalfInt")
    return HalfInt(v.twice // 2)


@dataclass(frozen=True)
class HyperValue:
    """Exact value rat * pi^(pi_half_exp / 2), rat a reduced Fraction."""

    rat: Fraction
    pi_half_exp: int = 0

    ONE: "HyperValue" = None  # set below

    @staticmethod
    def of(value) -> "HyperValue":
        if isinstance(value, HyperValue):
            return value
        return HyperValue(Fraction(value), 0)

    def __mul__(self, other) -> "HyperValue":
        o = HyperValue.of(other)
        return HyperValue(self.rat * o.rat, self.pi_half_exp + o.pi_half_exp)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HyperValue":
        o = HyperValue.of(other)
        return HyperValue(self.rat / o.rat, self.pi_half_exp - o.pi_half_exp)

    def __eq__(self, other) -> bool:
        o = HyperValue.of(other)
        if self.rat == 0 and o.rat == 0:
            return True
        return self.rat == o.rat and self.pi_half_exp == o.pi_half_exp

    def to_count(self) -> int:
        """Convert to a nonnegative integer; the pi power must have cancelled."""
        if self.rat == 0:
            return 0
        if self.pi_half_exp != 0:
            raise ValueError(f"residual pi^({self.pi_half_exp}/2) in {self}")
        if self.rat.denominator != 1 or self.rat < 0:
            raise ValueError(f"not a nonnegative integer: {self.rat}")
        return self.rat.numerator

    def __repr__(self) -> str:
        if self.pi_half_exp == 0:
            return f"{self.rat}"
        return f"{self.rat}*pi^({self.pi_half_exp}/2)"


HyperValue.ONE = HyperValue(Fraction(1), 0)


@lru_cache(maxsize=None)
def _gamma_half_rat(j: int) -> Fraction:
    # Gamma(j + 1/2) = (2j)!/(4^j j!) * sqrt(pi); rational part only.
    return Fraction(factorial(2 * j), 4**j * factorial(j))


@lru_cache(maxsize=None)
def _hyper_twice(twice: int) -> HyperValue:
    if twice < 0:
        raise NegativeArgument(f"H undefined for negative argument {twice}/2")
    if twice % 2 == 0:
        n = twice // 2
        prod = 1
        for k in range(n):
            prod *= factorial(k)
        return HyperValue(Fraction(prod), 0)
    k = (twice - 1) // 2  # n = k + 1/2
    rat = Fraction(1)
    for j in range(k + 1):
        rat *= _gamma_half_rat(j)
    return HyperValue(rat, k + 1)


def hyperfactorial(n) -> HyperValue:
    """H(n) for a nonnegative integer or half-integer ``n``."""
    return _hyper_twice(HalfInt.of(n).twice)


H = hyperfactorial


def pp_box(a: int, b: int, c: int) -> int:
    """MacMahon's count of plane partitions in an a x b x c box."""
    if min(a, b, c) < 0:
        raise NegativeArgument("box sides must be nonnegative")
    value = H(a) * H(b) * H(c) * H(a + b + c) / H(a + b) / H(b + c) / H(c + a)
    return value.to_count()
