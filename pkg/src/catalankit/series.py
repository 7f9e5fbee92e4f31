"""Truncated power series and the two generating functions.

A PowerSeries is a fixed-length tuple of coefficients, index = power.
Coefficients are either all Fraction (exact mode) or all float; the
algorithms are identical, only the scalar type differs. Reciprocal and
square root are computed by Newton iteration, which doubles the number
of correct coefficients each step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import exact_sqrt

__all__ = [
    "PowerSeries",
    "series_mul",
    "series_recip",
    "series_sqrt",
    "gf_catalan",
    "gf_catalan2",
]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0 .. c_(order-1) of a series truncated at x^order."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("PowerSeries: need at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def exact(self) -> bool:
        return isinstance(self.coeffs[0], Fraction)

    def coefficient(self, n: int):
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]


def _mul(a: tuple, b: tuple, order: int) -> tuple:
    out = [a[0] * 0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return tuple(out)


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def series_mul(s: PowerSeries, t: PowerSeries) -> PowerSeries:
    """Product truncated to the shorter operand's order."""
    order = min(s.order, t.order)
    return PowerSeries(_mul(s.coeffs, t.coeffs, order))


def _recip_coeffs(c: tuple, order: int) -> tuple:
    if c[0] == 0:
        raise ValueError("series reciprocal: constant term is zero")
    one = c[0] / c[0]
    v = (one / c[0],)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        # v <- v (2 - c v), truncated; doubles correct coefficients
        cv = _mul(c[:prec] + (c[0] * 0,) * max(0, prec - len(c)), v, prec)
        two_minus = tuple((2 * one if i == 0 else one * 0) - x for i, x in enumerate(cv))
        v = _mul(v, two_minus, prec)
    return v


def series_recip(s: PowerSeries) -> PowerSeries:
    """Multiplicative inverse truncated to s.order; needs c_0 != 0."""
    return PowerSeries(_recip_coeffs(s.coeffs, s.order))


def series_sqrt(s: PowerSeries) -> PowerSeries:
    """Square root with r_0 > 0, truncated to s.order.

    Newton iteration r <- (r + s/r) / 2. In exact mode the constant term
    must have a rational square root; in float mode it must be positive.
    """
    c = s.coeffs
    if s.exact:
        root = exact_sqrt(c[0])
        if c[0] <= 0 or root is None:
            raise ValueError(
                "series sqrt: constant term must be positive with a rational root"
            )
    else:
        if c[0] <= 0:
            raise ValueError("series sqrt: constant term must be positive")
        root = math.sqrt(c[0])
    one = c[0] / c[0]
    half = one / 2
    r = (root,)
    prec = 1
    while prec < s.order:
        prec = min(2 * prec, s.order)
        padded = c[:prec] + (c[0] * 0,) * max(0, prec - len(c))
        quotient = _mul(padded, _recip_coeffs(r + (c[0] * 0,) * (prec - len(r)), prec), prec)
        r = tuple(half * x for x in _add(r + (c[0] * 0,) * (prec - len(r)), quotient))
    return PowerSeries(r)


def gf_catalan(order: int) -> PowerSeries:
    """Series of 2 / (1 + sqrt(1 - 4x)); coefficient n is C_n. Exact."""
    if order < 1:
        raise ValueError("gf_catalan: order must be >= 1")
    base = PowerSeries((Fraction(1), Fraction(-4)) + (Fraction(0),) * max(0, order - 2))
    root = series_sqrt(base)
    denom = PowerSeries(_add(root.coeffs, (Fraction(1),) + (Fraction(0),) * (order - 1)))
    inv = series_recip(denom)
    return PowerSeries(tuple(2 * x for x in inv.coeffs))


def gf_catalan2(a, b, order: int) -> PowerSeries:
    """Series of 1 / (a + sqrt(b - x)) truncated at x^order.

    Exact mode engages when b has a rational square root (a may be any
    rational, which every float already is); otherwise coefficients are
    floats. Requires a >= 0 and b > 0.
    """
    if order < 1:
        raise ValueError("gf_catalan2: order must be >= 1")
    if not (a >= 0 and b > 0):
        raise ValueError("gf_catalan2: need a >= 0 and b > 0")
    sqrt_b = exact_sqrt(Fraction(b))
    if sqrt_b is not None:
        af, bf = Fraction(a), Fraction(b)
        base = PowerSeries((bf, Fraction(-1)) + (Fraction(0),) * max(0, order - 2))
        root = series_sqrt(base)
        denom = PowerSeries((root.coeffs[0] + af,) + root.coeffs[1:])
        return series_recip(denom)
    af, bf = float(a), float(b)
    base = PowerSeries((bf, -1.0) + (0.0,) * max(0, order - 2))
    root = series_sqrt(base)
    denom = PowerSeries((root.coeffs[0] + af,) + root.coeffs[1:])
    return series_recip(denom)
