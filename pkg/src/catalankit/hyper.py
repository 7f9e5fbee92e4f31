"""Hypergeometric series evaluation.

Two evaluation regimes, selected by :class:`HypTermination`:

* terminating: a nonpositive-integer upper parameter cuts the series off
  at a known index; the finite sum is then carried out in exact rational
  arithmetic and rounded once at the end, so terminating evaluations are
  immune to cancellation between large alternating terms.
* convergent: floating-point summation for |z| < 1, stopping once the
  current term is below tol relative to the partial sum for three
  consecutive terms.

Also provides the Jacobi polynomial and the Ferrers associated Legendre
function on (0, 1), both routed through the Gauss series so that every
special-function value in the package shares one audited code path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import rising_factorial

__all__ = [
    "HypTermination",
    "HypergeometricError",
    "HypConvergenceError",
    "gauss_2f1",
    "pfq_series",
    "jacobi_p",
    "assoc_legendre_p",
]


class HypergeometricError(ValueError):
    """Invalid parameters: lower-parameter pole or divergent argument."""


class HypConvergenceError(RuntimeError):
    """Convergent-mode summation did not settle within max_terms."""


@dataclass(frozen=True)
class HypTermination:
    """How a hypergeometric sum is to be ended.

    ``k_max`` set: terminating series, summed exactly through index k_max.
    ``k_max`` None: convergent series controlled by ``tol``/``max_terms``.
    """

    k_max: int | None = None
    tol: float = 1e-15
    max_terms: int = 100_000

    def __post_init__(self):
        if self.k_max is not None and self.k_max < 0:
            raise ValueError("HypTermination: k_max must be >= 0")
        if not 0.0 < self.tol < 1.0:
            raise ValueError("HypTermination: tol must be in (0, 1)")
        if self.max_terms < 1:
            raise ValueError("HypTermination: max_terms must be >= 1")

    @classmethod
    def terminating(cls, k_max: int) -> HypTermination:
        return cls(k_max=k_max)

    @classmethod
    def convergent(cls, tol: float = 1e-15, max_terms: int = 100_000) -> HypTermination:
        return cls(tol=tol, max_terms=max_terms)


def _nonpositive_int(x) -> int | None:
    """-x when x is a nonpositive integer-valued number, else None."""
    if isinstance(x, int):
        return -x if x <= 0 else None
    if isinstance(x, Fraction):
        return -int(x) if x.denominator == 1 and x <= 0 else None
    if isinstance(x, float):
        return -int(x) if x.is_integer() and x <= 0.0 else None
    return None


def _auto_termination(upper) -> HypTermination:
    cuts = [k for k in (_nonpositive_int(u) for u in upper) if k is not None]
    return HypTermination.terminating(min(cuts)) if cuts else HypTermination.convergent()


def _exact_inputs(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def _sum_terminating(upper, lower, z, k_max: int) -> Fraction:
    """Exact rational sum of the series through index k_max.

    Float inputs are converted to the dyadic rationals they already are,
    so the only rounding in a terminating evaluation is the caller's
    final float() conversion.
    """
    up = [Fraction(u) for u in upper]
    lo = [Fraction(v) for v in lower]
    zf = Fraction(z)
    total = Fraction(0)
    term = Fraction(1)
    for k in range(k_max + 1):
        total += term
        if k == k_max:
            break
        num = Fraction(1)
        for u in up:
            num *= u + k
        if num == 0:
            break
        den = Fraction(k + 1)
        for v in lo:
            if v + k == 0:
                raise HypergeometricError(
                    f"lower parameter {v} hits a pole at term {k + 1}"
                )
            den *= v + k
        term = term * num * zf / den
    return total


def _sum_convergent(upper, lower, z, tol: float, max_terms: int) -> float:
    up = [float(u) for u in upper]
    lo = [float(v) for v in lower]
    zf = float(z)
    if len(up) > len(lo) + 1:
        raise HypergeometricError("series diverges: more upper than lower+1 parameters")
    if len(up) == len(lo) + 1 and abs(zf) >= 1.0:
        raise HypergeometricError(f"series requires |z| < 1, got z={zf}")
    total = 0.0
    term = 1.0
    settled = 0
    for k in range(max_terms):
        total += term
        if abs(term) <= tol * abs(total):
            settled += 1
            if settled >= 3:
                return total
        else:
            settled = 0
        num = 1.0
        for u in up:
            num *= u + k
        if num == 0.0:
            return total
        den = k + 1.0
        for v in lo:
            if v + k == 0.0:
                raise HypergeometricError(
                    f"lower parameter {v} hits a pole at term {k + 1}"
                )
            den *= v + k
        term = term * num * zf / den
    raise HypConvergenceError(f"series not settled after {max_terms} terms")


def pfq_series(upper, lower, z, term: HypTermination | None = None):
    """Generalized hypergeometric sum pFq(upper; lower; z).

    Terminating evaluations return a Fraction when every input is an int
    or Fraction and a float otherwise; convergent evaluations return a
    float. ``term=None`` picks terminating mode automatically when an
    upper parameter is a nonpositive integer.
    """
    upper, lower = tuple(upper), tuple(lower)
    if term is None:
        term = _auto_termination(upper)
    if term.k_max is not None:
        total = _sum_terminating(upper, lower, z, term.k_max)
        return total if _exact_inputs(*upper, *lower, z) else float(total)
    return _sum_convergent(upper, lower, z, term.tol, term.max_terms)


def gauss_2f1(a1, a2, c, z, term: HypTermination | None = None):
    """Gauss hypergeometric function 2F1(a1, a2; c; z) by direct summation."""
    return pfq_series((a1, a2), (c,), z, term)


def jacobi_p(n: int, alpha, beta, x):
    """Jacobi polynomial P_n^(alpha, beta)(x).

    Evaluated as binom(n+alpha, n) 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
    The series terminates, so the sum is exact; rational inputs give a
    Fraction, float inputs a float.
    """
    if n < 0:
        raise ValueError("jacobi_p: degree n must be >= 0")
    a, b, xx = Fraction(alpha), Fraction(beta), Fraction(x)
    lead = rising_factorial(a + 1, n)
    f = _sum_terminating((-n, n + a + b + 1), (a + 1,), (1 - xx) / 2, n)
    out = lead * f / factorial(n)
    return out if _exact_inputs(alpha, beta, x) else float(out)


def assoc_legendre_p(nu, mu, x) -> float:
    """Ferrers associated Legendre function P_nu^mu(x) for 0 < x < 1.

    Uses (1/Gamma(1-mu)) ((1+x)/(1-x))^(mu/2) 2F1(-nu, nu+1; 1-mu; (1-x)/2),
    the branch convention valid on the cut; only 0 < x < 1 is accepted.
    The series terminates when nu is a nonnegative integer and otherwise
    converges, since (1-x)/2 lies in (0, 1/2).
    """
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError("assoc_legendre_p: x must satisfy 0 < x < 1")
    if _nonpositive_int(1 - mu) is not None:
        raise ValueError("assoc_legendre_p: 1 - mu must not be a nonpositive integer")
    f = gauss_2f1(-nu, nu + 1, 1 - mu, (1.0 - x) / 2.0)
    pref = ((1.0 + x) / (1.0 - x)) ** (float(mu) / 2.0) / math.gamma(float(1 - mu))
    return pref * float(f)
