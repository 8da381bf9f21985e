"""Nonnegative real magnitudes with exact or directed-rounded bounds.

Control-function values (sigma, psi) and bound right-hand sides are exact
rationals whenever the inputs allow, and otherwise carry a rigorous
[lo, hi] float enclosure produced by directed rounding. Comparisons below
answer True/False only when the enclosures force the answer, and None when
they overlap, so every verdict built on them is conservative.

Bounds may mix ``Fraction`` and ``float``; Python compares the two types
exactly, so no precision is lost in mixed comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .padic import LogMagnitude, PrimeContext, float_down, float_up, power_bounds

Bound = Union[Fraction, float]


def _down(x: Bound) -> float:
    return float_down(x) if isinstance(x, Fraction) else x


def _up(x: Bound) -> float:
    return float_up(x) if isinstance(x, Fraction) else x


def _add_down(a: float, b: float) -> float:
    return math.nextafter(a + b, -math.inf)


def _add_up(a: float, b: float) -> float:
    return math.nextafter(a + b, math.inf)


def _mul_down(a: float, b: float) -> float:
    return math.nextafter(a * b, -math.inf)


def _mul_up(a: float, b: float) -> float:
    return math.nextafter(a * b, math.inf)


@dataclass(frozen=True)
class Magnitude:
    """Enclosure of a nonnegative real value; exact when lo == hi == Fraction."""

    lo: Bound
    hi: Bound

    def __post_init__(self):
        if self.lo < 0 or self.hi < self.lo:
            raise ValueError(f"invalid magnitude bounds [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value) -> "Magnitude":
        value = Fraction(value)
        return cls(value, value)

    @property
    def is_exact(self) -> bool:
        return (
            isinstance(self.lo, Fraction)
            and isinstance(self.hi, Fraction)
            and self.lo == self.hi
        )

    @property
    def is_zero(self) -> bool:
        return self.hi == 0

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError(f"magnitude [{self.lo}, {self.hi}] is not exact")
        return self.lo

    def __add__(self, other: "Magnitude") -> "Magnitude":
        if self.is_exact and other.is_exact:
            return Magnitude.exact(self.lo + other.lo)
        return Magnitude(
            max(0.0, _add_down(_down(self.lo), _down(other.lo))),
            _add_up(_up(self.hi), _up(other.hi)),
        )

    def __mul__(self, other: "Magnitude") -> "Magnitude":
        if self.is_exact and other.is_exact:
            return Magnitude.exact(self.lo * other.lo)
        if self.is_zero or other.is_zero:
            # exact zero annihilates even a fuzzy partner
            if (self.is_exact and self.is_zero) or (other.is_exact and other.is_zero):
                return Magnitude.exact(0)
        return Magnitude(
            max(0.0, _mul_down(_down(self.lo), _down(other.lo))),
            _mul_up(_up(self.hi), _up(other.hi)),
        )

    def pow_int(self, k: int) -> "Magnitude":
        if k < 0:
            raise ValueError("negative powers of magnitudes are not supported")
        out = Magnitude.exact(1)
        for _ in range(k):
            out = out * self
        return out

    # -- three-valued comparisons: True/False only when forced --

    def le(self, other: "Magnitude") -> Optional[bool]:
        if self.hi <= other.lo:
            return True
        if self.lo > other.hi:
            return False
        if self.is_exact and other.is_exact:
            return self.lo <= other.lo
        return None

    def lt(self, other: "Magnitude") -> Optional[bool]:
        if self.hi < other.lo:
            return True
        if self.lo >= other.hi:
            return False
        if self.is_exact and other.is_exact:
            return self.lo < other.lo
        return None

    def ge(self, other: "Magnitude") -> Optional[bool]:
        return other.le(self)

    @property
    def definitely_positive(self) -> bool:
        return self.lo > 0

    @staticmethod
    def max_of(items: Iterable["Magnitude"]) -> "Magnitude":
        """Endpointwise max: a valid enclosure of the true maximum."""
        items = list(items)
        if not items:
            raise ValueError("max_of requires a nonempty list")
        if all(m.is_exact for m in items):
            return Magnitude.exact(max(m.lo for m in items))
        return Magnitude(max(m.lo for m in items), max(m.hi for m in items))

    @staticmethod
    def min_of(items: Iterable["Magnitude"]) -> "Magnitude":
        items = list(items)
        if not items:
            raise ValueError("min_of requires a nonempty list")
        if all(m.is_exact for m in items):
            return Magnitude.exact(min(m.lo for m in items))
        return Magnitude(min(m.lo for m in items), min(m.hi for m in items))


def magnitude_of(m: LogMagnitude, ctx: PrimeContext) -> Magnitude:
    """The norm value p**(-exponent) as a magnitude.

    Exact for integer exponents; a rigorous enclosure otherwise (the value
    is irrational then, e.g. after beta-scaling with non-integer result).
    """
    if m.is_zero:
        return Magnitude.exact(0)
    if m.exponent.denominator == 1:
        return Magnitude.exact(m.as_fraction(ctx))
    lo, hi = power_bounds(ctx.p, -m.exponent)
    return Magnitude(lo, hi)
