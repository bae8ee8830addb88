"""Exact and log-domain evaluation of the pairing-count bound q(x, n).

q(x, n) bounds the number of girth-16 pairings whose projection carries a
largest almost-independent set with independent part of size x.  It is a
double sum over (i, j) of a product of binomials, powers of 2 and 3, the
matched-edge weight (1/1.618)^j, and falling-factorial tails.  Exact mode
uses big rationals (1/1.618 = 500/809); log mode uses log-gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

import mpmath

WEIGHT_BASE = Fraction(500, 809)   # exact 1/1.618

# Frozen once against the n=200 evaluation, then re-verified at n=400; the
# polynomial prefactor of the exponent bound hides this constant.
RATIO_CONSTANT_C = -33.0


class EmptyWindowError(ValueError):
    """No integer x satisfies 0.454*n < x <= 0.45537*n."""


def double_factorial(m: int) -> int:
    """(m)!! for odd m >= 1, exact."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"m must be an odd positive integer, got {m}")
    out = 1
    for k in range(m, 0, -2):
        out *= k
    return out


def feasible_x(n: int) -> int:
    """The unique-or-smallest integer x with 0.454n < x <= 0.45537n."""
    lo = Fraction(454, 1000) * n
    hi = Fraction(45537, 100000) * n
    x = math.floor(lo) + 1
    if not (lo < x <= hi):
        raise EmptyWindowError(
            f"no integer x in (0.454*{n}, 0.45537*{n}] = ({float(lo)}, {float(hi)}]")
    return x


@dataclass(frozen=True)
class LogValue:
    log_value: float
    sign: int = 1


@dataclass(frozen=True)
class CountingParams:
    n: int
    x: int
    i: int
    j: int

    def factorial_arguments(self) -> List[Tuple[str, int]]:
        n, x, i, j = self.n, self.x, self.i, self.j
        h = n // 2
        return [
            ("2x+i-n/2", 2 * x + i - h),
            ("n/2-x-i", h - x - i),
            ("2x-3i-n/2", 2 * x - 3 * i - h),
            ("n/2-x+2i", h - x + 2 * i),
            ("n-2i-2x-j", n - 2 * i - 2 * x - j),
            ("n-2x+4i-j", n - 2 * x + 4 * i - j),
            ("6x-3n/2-9i", 6 * x - 3 * h - 9 * i),
            ("6x-3n/2+3i", 6 * x - 3 * h + 3 * i),
            ("10x-7n/2-5i+j", 10 * x - 7 * h - 5 * i + j),
        ]

    def validate(self) -> None:
        n, x, i, j = self.n, self.x, self.i, self.j
        if n <= 0 or n % 2 != 0:
            raise ValueError(f"n must be a positive even integer, got {n}")
        if not (Fraction(454, 1000) * n < x <= Fraction(45537, 100000) * n):
            raise ValueError(f"x={x} outside (0.454n, 0.45537n] for n={n}")
        if not (0 <= i <= n // 2 - x):
            raise ValueError(f"i={i} violates 0 <= i <= n/2 - x = {n // 2 - x}")
        if not (0 <= j <= n - 2 * x - 2 * i):
            raise ValueError(
                f"j={j} violates 0 <= j <= n - 2x - 2i = {n - 2 * x - 2 * i}")
        for name, value in self.factorial_arguments():
            if value < 0:
                raise ValueError(f"factorial argument {name} = {value} < 0")


def _r_exact(p: CountingParams) -> Fraction:
    n, x, i, j = p.n, p.x, p.i, p.j
    h = n // 2
    F = math.factorial
    term = Fraction(F(n), F(h - i) * F(h + i))
    term *= Fraction(F(h - i) * 3 ** (n - 2 * x - 2 * i),
                     F(2 * x + i - h) * 2 ** (h - x - i) * F(h - x - i))
    term *= Fraction(F(h + i) * 3 ** (n - 2 * x + 4 * i),
                     F(2 * x - 3 * i - h) * 2 ** (h - x + 2 * i) * F(h - x + 2 * i))
    term *= Fraction(F(n - 2 * i - 2 * x), F(j) * F(n - 2 * i - 2 * x - j))
    term *= Fraction(F(n - 2 * x + 4 * i), F(j) * F(n - 2 * x + 4 * i - j))
    term *= 4 ** j * F(j) * WEIGHT_BASE ** j
    term *= Fraction(F(6 * x - 3 * h - 9 * i) * F(6 * x - 3 * h + 3 * i),
                     F(10 * x - 7 * h - 5 * i + j))
    return term


def _r_log(p: CountingParams) -> float:
    n, x, i, j = p.n, p.x, p.i, p.j
    h = n // 2
    lg = lambda m: math.lgamma(m + 1)
    ln2, ln3 = math.log(2), math.log(3)
    out = lg(n) - lg(h - i) - lg(h + i)
    out += (lg(h - i) + (n - 2 * x - 2 * i) * ln3
            - lg(2 * x + i - h) - (h - x - i) * ln2 - lg(h - x - i))
    out += (lg(h + i) + (n - 2 * x + 4 * i) * ln3
            - lg(2 * x - 3 * i - h) - (h - x + 2 * i) * ln2 - lg(h - x + 2 * i))
    out += lg(n - 2 * i - 2 * x) - lg(j) - lg(n - 2 * i - 2 * x - j)
    out += lg(n - 2 * x + 4 * i) - lg(j) - lg(n - 2 * x + 4 * i - j)
    out += 2 * j * ln2 + lg(j) + j * math.log(float(WEIGHT_BASE))
    out += (lg(6 * x - 3 * h - 9 * i) + lg(6 * x - 3 * h + 3 * i)
            - lg(10 * x - 7 * h - 5 * i + j))
    return out


def r_term(p: CountingParams, mode: str = "exact"):
    """One (i, j) term of q(x, n); exact rational or log-gamma LogValue."""
    p.validate()
    if mode == "exact":
        return _r_exact(p)
    if mode == "log":
        return LogValue(_r_log(p))
    raise ValueError(f"unknown mode {mode!r}")


def index_grid(n: int, x: int) -> Iterator[Tuple[int, int]]:
    for i in range(0, n // 2 - x + 1):
        for j in range(0, n - 2 * x - 2 * i + 1):
            yield i, j


def q_total(n: int, x: int, mode: str = "exact"):
    """q(x, n) = sum over the (i, j) grid of r(x, n, i, j)."""
    if mode == "exact":
        total = Fraction(0)
        for i, j in index_grid(n, x):
            total += _r_exact(CountingParams(n, x, i, j))
        return total
    if mode == "log":
        logs = [_r_log(CountingParams(n, x, i, j)) for i, j in index_grid(n, x)]
        m = max(logs)
        # exact compensated summation via fsum
        return LogValue(m + math.log(math.fsum(math.exp(v - m) for v in logs)))
    raise ValueError(f"unknown mode {mode!r}")


def log_of_fraction(q: Fraction) -> float:
    """Natural log of a positive rational with big-integer-safe precision."""
    if q <= 0:
        raise ValueError("log of non-positive rational")
    with mpmath.workdps(30):
        return float(mpmath.log(mpmath.mpf(q.numerator))
                     - mpmath.log(mpmath.mpf(q.denominator)))


def log_double_factorial(m: int) -> float:
    """ln(m!!) for odd m, via (2k-1)!! = (2k)! / (2^k k!)."""
    if m % 2 == 0:
        raise ValueError("m must be odd")
    k = (m + 1) // 2
    return math.lgamma(2 * k + 1) - k * math.log(2) - math.lgamma(k + 1)


def ratio_vs_exponent(n: int, x: int, constant_c: float = RATIO_CONSTANT_C
                      ) -> Tuple[float, float]:
    """Compare ln q - ln (3n-1)!! against n * max ln h + 6 ln n + C.

    The grid maximum of ln h is taken over the exact rational points
    (x/n, i/n, j/n) of the (i, j) index grid, using the certified interval
    evaluator's upper endpoints.
    """
    from .certify import Constants, log_h_val

    lhs = q_total(n, x, "log").log_value - log_double_factorial(3 * n - 1)
    consts = Constants()
    best = -math.inf
    for i, j in index_grid(n, x):
        enc = log_h_val(Fraction(x, n), Fraction(i, n), Fraction(j, n), consts)
        best = max(best, enc.hi)
    rhs = n * best + 6 * math.log(n) + constant_c
    return lhs, rhs
