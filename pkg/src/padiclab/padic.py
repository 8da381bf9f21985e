"""Exact p-adic valuation and norm primitives.

All scalars are ``fractions.Fraction`` values (arbitrary-precision, stored
reduced with positive denominator, which is exactly the canonical form the
rest of the package relies on). Norm values are kept in exponent form: the
p-adic absolute value p**(-g) is represented by its exponent g alone, with
the norm of zero as a distinguished smallest element. Exponent arithmetic
keeps beta-scaling and ultrametric comparisons exact even when the norm
value itself is irrational (rational beta, non-integer g).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

Rational = Union[int, Fraction]

#: Returned by :func:`valuation` for the zero rational.
INFINITE = math.inf

# Deterministic Miller-Rabin witness set, valid for every n below this bound
# (far beyond any prime used at desk scale).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    """Deterministic primality check for n < 3.3e24."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    if n >= _MR_BOUND:
        raise ValueError(f"primality check supports n < {_MR_BOUND}, got {n}")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeContext:
    """A prime p together with the scaling constant beta, 0 < beta <= 1."""

    p: int
    beta: Fraction = Fraction(1)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p!r}")
        beta = Fraction(self.beta)
        if not 0 < beta <= 1:
            raise ValueError(f"beta must satisfy 0 < beta <= 1, got {beta}")
        object.__setattr__(self, "beta", beta)


@dataclass(frozen=True, order=False)
class LogMagnitude:
    """A p-adic norm value p**(-exponent), or the norm 0 of the zero element.

    ``exponent is None`` encodes the zero norm (exponent +infinity). As norm
    values, m1 <= m2 iff exponent(m1) >= exponent(m2); the zero norm is the
    smallest. Comparisons and ``min``/``max`` below follow this value order.
    """

    exponent: Optional[Fraction]

    def __post_init__(self):
        if self.exponent is not None:
            object.__setattr__(self, "exponent", Fraction(self.exponent))

    @classmethod
    def zero(cls) -> "LogMagnitude":
        return cls(None)

    @classmethod
    def from_exponent(cls, exponent: Rational) -> "LogMagnitude":
        return cls(Fraction(exponent))

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def _key(self):
        # sort key in value order; zero norm first
        return (0, 0) if self.exponent is None else (1, -self.exponent)

    def __lt__(self, other: "LogMagnitude") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "LogMagnitude") -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: "LogMagnitude") -> bool:
        return other < self

    def __ge__(self, other: "LogMagnitude") -> bool:
        return other <= self

    def __mul__(self, other: "LogMagnitude") -> "LogMagnitude":
        if self.is_zero or other.is_zero:
            return LogMagnitude.zero()
        return LogMagnitude(self.exponent + other.exponent)

    def scale(self, factor: Rational) -> "LogMagnitude":
        """Raise the norm value to a positive rational power, exactly."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError(f"power must be positive, got {factor}")
        if self.is_zero:
            return self
        return LogMagnitude(self.exponent * factor)

    def inverse(self) -> "LogMagnitude":
        if self.is_zero:
            raise ZeroDivisionError("the zero norm has no inverse")
        return LogMagnitude(-self.exponent)

    def as_fraction(self, ctx: PrimeContext) -> Fraction:
        """Exact value p**(-exponent); only defined for integer exponents."""
        if self.is_zero:
            return Fraction(0)
        if self.exponent.denominator != 1:
            raise ValueError(f"p^(-({self.exponent})) is not rational")
        g = self.exponent.numerator
        return Fraction(1, ctx.p**g) if g >= 0 else Fraction(ctx.p ** (-g))


def valuation(q: Rational, ctx: PrimeContext) -> Union[int, float]:
    """Exponent of p in q: q = p**g * (e/f) with p dividing neither e nor f.

    Returns :data:`INFINITE` for q = 0.
    """
    q = Fraction(q)
    if q == 0:
        return INFINITE
    p = ctx.p
    # q is stored reduced, so at most one of numerator/denominator carries p
    num, den = q.numerator, q.denominator
    if num % p == 0:
        return _int_valuation(num, p)
    if den % p == 0:
        return -_int_valuation(den, p)
    return 0


def _int_valuation(n: int, p: int) -> int:
    # n != 0 and p | n on entry for the callers above, but stay general
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_abs(q: Rational, ctx: PrimeContext) -> LogMagnitude:
    """The p-adic absolute value |q|_p = p**(-valuation), in exponent form."""
    v = valuation(q, ctx)
    if v is INFINITE:
        return LogMagnitude.zero()
    return LogMagnitude(Fraction(v))


def logmag_scale_beta(m: LogMagnitude, ctx: PrimeContext) -> LogMagnitude:
    """Apply the beta power: (p**(-g))**beta = p**(-g*beta), exactly."""
    return m.scale(ctx.beta)


def logmag_max(ms: Iterable[LogMagnitude]) -> LogMagnitude:
    """Largest norm value (smallest exponent); the zero norm is smallest."""
    ms = list(ms)
    if not ms:
        raise ValueError("logmag_max requires a nonempty list")
    return max(ms)


def logmag_to_real(m: LogMagnitude, ctx: PrimeContext, direction: str) -> float:
    """Directed float approximation of the norm value p**(-exponent).

    ``direction`` is "up" or "down". Round-up is meant for left-hand sides
    of bound checks and round-down for right-hand sides, so that every
    "bound holds" verdict derived from these floats is conservative.
    """
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    if m.is_zero:
        return 0.0
    lo, hi = power_bounds(ctx.p, -m.exponent)
    from .errors import MagnitudeRangeError

    try:
        if direction == "down":
            return float_down(lo)
        return float_up(hi)
    except OverflowError:
        raise MagnitudeRangeError(m.exponent) from None


# --- rigorous enclosures for p**(rational), integer arithmetic only ---

_ROOT_SCALE_BITS = 80


def integer_root(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, k >= 1, by Newton iteration on integers."""
    if x < 0 or k < 1:
        raise ValueError("integer_root requires x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    r = 1 << (-(-x.bit_length() // k))  # >= true root
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            return r
        r = nr


def power_bounds(p: int, c: Fraction) -> tuple:
    """Exact rational enclosure (lo, hi) of p**c with lo <= p**c <= hi."""
    c = Fraction(c)
    if c == 0:
        one = Fraction(1)
        return one, one
    if c < 0:
        lo, hi = power_bounds(p, -c)
        return 1 / hi, 1 / lo
    a, b = c.numerator, c.denominator
    if b == 1:
        v = Fraction(p**a)
        return v, v
    s = 1 << _ROOT_SCALE_BITS
    r = integer_root(p**a * s**b, b)  # r <= p**(a/b) * s < r + 1
    return Fraction(r, s), Fraction(r + 1, s)


def float_down(x: Fraction) -> float:
    """Largest float <= x (raises OverflowError when |x| exceeds float range)."""
    f = float(x)
    if math.isinf(f):
        raise OverflowError
    if Fraction(f) > x:
        f = math.nextafter(f, -math.inf)
    return f


def float_up(x: Fraction) -> float:
    """Smallest float >= x (raises OverflowError when |x| exceeds float range)."""
    f = float(x)
    if math.isinf(f):
        raise OverflowError
    if Fraction(f) < x:
        f = math.nextafter(f, math.inf)
    return f
