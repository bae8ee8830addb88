"""Outward-rounded interval arithmetic over float endpoints.

Every operation returns an interval guaranteed to contain the true real
result.  Basic arithmetic relies on IEEE-754 double operations being
correctly rounded, so widening each endpoint by one ulp via
``math.nextafter`` is sound.  ``exp``/``log`` from libm are not correctly
rounded; those endpoints are widened by two ulps.

Decimal constants (0.454, 2.337, ...) must be lifted through
:func:`Interval.from_fraction` / :func:`Interval.from_decimal`, never
through a bare float literal, so the enclosure covers the exact rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

_INF = math.inf


def _up(x: float) -> float:
    return math.nextafter(x, _INF) if math.isfinite(x) else x


def _down(x: float) -> float:
    return math.nextafter(x, -_INF) if math.isfinite(x) else x


def _up2(x: float) -> float:
    return _up(_up(x))


def _down2(x: float) -> float:
    return _down(_down(x))


class IntervalError(ValueError):
    """Domain violation in a certified evaluation."""


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise IntervalError("NaN endpoint")
        if self.lo > self.hi:
            raise IntervalError(f"inverted endpoints [{self.lo}, {self.hi}]")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def exact(x: float) -> "Interval":
        return Interval(float(x), float(x))

    @staticmethod
    def from_fraction(q) -> "Interval":
        q = Fraction(q)
        f = float(q)
        fq = Fraction(f) if math.isfinite(f) else None
        if fq == q:
            return Interval(f, f)
        if fq is not None and fq < q:
            return Interval(f, _up(f))
        return Interval(_down(f), f)

    @staticmethod
    def from_decimal(text: str) -> "Interval":
        return Interval.from_fraction(Fraction(text))

    @staticmethod
    def hull(*xs: "Interval") -> "Interval":
        return Interval(min(x.lo for x in xs), max(x.hi for x in xs))

    # -- queries -----------------------------------------------------------

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Rational):
            return Fraction(x) >= Fraction(self.lo) and Fraction(x) <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise IntervalError(f"empty intersection of {self} and {other}")
        return Interval(lo, hi)

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Interval":
        if isinstance(x, Interval):
            return x
        if isinstance(x, Rational):
            return Interval.from_fraction(x)
        if isinstance(x, int):
            return Interval.exact(x)
        raise TypeError(f"cannot coerce {x!r} to Interval (float literals not allowed)")

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        o = Interval._coerce(other)
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-Interval._coerce(other))

    def __rsub__(self, other):
        return Interval._coerce(other) + (-self)

    def __mul__(self, other):
        o = Interval._coerce(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(ps)), _up(max(ps)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Interval._coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise IntervalError(f"division by interval containing zero: {o}")
        ps = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(ps)), _up(max(ps)))

    def __rtruediv__(self, other):
        return Interval._coerce(other) / self

    def square(self) -> "Interval":
        lo, hi = abs(self.lo), abs(self.hi)
        if lo > hi:
            lo, hi = hi, lo
        contains_zero = self.lo <= 0.0 <= self.hi
        return Interval(0.0 if contains_zero else _down(lo * lo), _up(hi * hi))

    def sqrt(self) -> "Interval":
        if self.lo < 0:
            raise IntervalError(f"sqrt of {self}")
        return Interval(_down(math.sqrt(self.lo)), _up(math.sqrt(self.hi)))

    def log(self) -> "Interval":
        if self.lo < 0:
            raise IntervalError(f"log of {self}")
        if self.hi == 0.0:
            return Interval(-_INF, -_INF)
        lo = -_INF if self.lo == 0.0 else _down2(math.log(self.lo))
        return Interval(lo, _up2(math.log(self.hi)))

    def exp(self) -> "Interval":
        lo = 0.0 if self.lo == -_INF else _down2(math.exp(self.lo))
        return Interval(lo, _up2(math.exp(self.hi)))


def xlogx(t: Interval, nonneg: bool = False) -> Interval:
    """Enclosure of t*ln(t) with the continuous convention 0*ln(0) = 0.

    With ``nonneg=True`` the argument is known to be >= 0 exactly and a
    slightly negative lower endpoint (outward-rounding slack) is clamped.
    """
    if t.lo < 0:
        if not nonneg:
            raise IntervalError(f"xlogx of {t}")
        t = Interval(0.0, max(t.hi, 0.0))

    def point(x: float, rnd) -> float:
        if x == 0.0:
            return 0.0
        return rnd(x * math.log(x))

    vals = [point(t.lo, _down2), point(t.lo, _up2), point(t.hi, _down2), point(t.hi, _up2)]
    lo, hi = min(vals), max(vals)
    # x*ln(x) attains its minimum -1/e at x = 1/e
    if t.lo < 1.0 / math.e < t.hi:
        lo = min(lo, _down2(-1.0 / math.e))
    return Interval(lo, hi)


# Frequently used exact constants.
LN2 = Interval.exact(2).log()
LN3 = Interval.exact(3).log()
