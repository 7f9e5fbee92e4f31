"""The Catalan functional cf(n; a, b, p) and its representations.

The functional generalizes the Catalan numbers of the second kind: it
is defined by the half-line integral

    (sin(p pi)/pi) * integral_0^inf
        t^p / ((a^2 + 2 a cos(p pi) t^p + t^(2p)) (b + t)^(n+1)) dt

for a >= 0, b > 0, 0 < p < 1, n >= 0, and reduces to C2(n; a, b) at
p = 1/2 (the cosine vanishes and the denominator collapses). Besides
the integral there are a finite double sum, a single series in powers
of b^p/a (two convergence branches), and a closed form through
Q(n, y, p) that covers the b^p = a boundary.

Prefactor correction: the published series and Q-form carry 1/(n+1)
where the derivation's inner Beta integral produces Gamma(n+2), i.e.
the prefactor should be 1/n!. This module implements the corrected
forms; cf_series_as_printed evaluates the published version verbatim
(including its k = 0 descending start) so the n!/(n+1) discrepancy can
be measured rather than silently patched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .catalan2 import c2_hyp_closed
from .exact import exact_pow, rising_factorial
from .qfunc import q_series_with_terms, q_stirling, series_tail_bound
from .quad import HalflineIntegrand, QuadResult, integrate_halfline

__all__ = [
    "SeriesEvaluation",
    "cf_quadrature",
    "cf_double_sum",
    "cf_series",
    "cf_series_detailed",
    "cf_series_as_printed",
    "cf_via_q",
    "cf_half_reduction_check",
]


def _check_domain(a, b, p, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if not a >= 0:
        raise ValueError(f"a must be >= 0, got {a!r}")
    if not b > 0:
        raise ValueError(f"b must be > 0, got {b!r}")
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p!r}")


def _exact_scalars(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def _b_to_p(b, p):
    """(b**p, is_exact): Fraction when the power is rational, else float."""
    power = exact_pow(Fraction(b), Fraction(p))
    if power is not None:
        return power, True
    return float(b) ** float(p), False


def cf_quadrature(a, b, p, n: int, tol: float = 1e-10) -> QuadResult:
    """The defining integral, by adaptive quadrature; needs a > 0.

    Endpoint exponent p, decay exponent n+1+p. The denominator is
    |t^p e^(i p pi) + a|^2 >= a^2 sin^2(p pi) > 0, so the integrand has
    no pole on the half-line.
    """
    _check_domain(a, b, p, n)
    if not a > 0:
        raise ValueError("cf_quadrature needs a > 0")
    af, bf, pf = float(a), float(b), float(p)
    a2 = af * af
    two_a_cos = 2.0 * af * math.cos(pf * math.pi)
    power = n + 1

    def f(t: float) -> float:
        tp = t**pf
        return tp / ((a2 + two_a_cos * tp + tp * tp) * (bf + t) ** power)

    raw = integrate_halfline(
        HalflineIntegrand(f, endpoint_exponent=pf, decay_exponent=n + 1 + pf),
        tol=tol,
    )
    scale = math.sin(pf * math.pi) / math.pi
    return QuadResult(raw.value * scale, raw.abs_err_est * scale, raw.evaluations)


def cf_double_sum(a, b, p, n: int):
    """Finite double-sum representation; always convergent, a = 0 allowed.

    (1/((a+b^p) n! b^n)) sum_{k=0..n} (1+a/b^p)^(-k)
        sum_{m=0..k} (-1)^m binom(k,m) (-pm)_n.

    The inner sum is the k-th finite difference of the degree-n
    polynomial m -> (-pm)_n, so terms with k > n vanish and the outer
    sum is finite. Inner sums cancel heavily and are always accumulated
    in exact rational arithmetic; the result is a Fraction when a, b, p
    and b^p are all rational.
    """
    _check_domain(a, b, p, n)
    power, power_exact = _b_to_p(b, p)
    pf = Fraction(p)
    inner_sums = []
    for k in range(n + 1):
        inner = Fraction(0)
        for m in range(k + 1):
            inner += (-1) ** m * comb(k, m) * rising_factorial(-pf * m, n)
        inner_sums.append(inner)
    if power_exact:
        af, bf = Fraction(a), Fraction(b)
        weight = 1 / (1 + af / power)
        total = sum(
            (inner * weight**k for k, inner in enumerate(inner_sums)), Fraction(0)
        )
        value = total / ((af + power) * factorial(n) * bf**n)
        return value if _exact_scalars(a, b, p) else float(value)
    af, bf = float(a), float(b)
    weight = 1.0 / (1.0 + af / power)
    total = math.fsum(float(inner) * weight**k for k, inner in enumerate(inner_sums))
    return total / ((af + power) * factorial(n) * bf**n)


@dataclass(frozen=True)
class SeriesEvaluation:
    """Outcome of a single-series evaluation: which branch, how many terms."""

    value: float
    branch: str  # "ascending" (powers of b^p/a) or "descending" (powers of a/b^p)
    ratio: float  # y = b^p/a
    terms: int


def _descending_sum(
    n: int, x: Fraction, p: Fraction, tol: float, max_terms: int
) -> tuple[Fraction, int]:
    """sum_{k>=1} (pk)_n (-x)^k exactly, stopped by the shared tail bound."""
    reltol = Fraction(tol if tol > 0 else 1e-15)
    total = Fraction(0)
    for k in range(1, max_terms + 1):
        total += rising_factorial(p * k, n) * (-x) ** k
        if total and series_tail_bound(n, x, p, k + 1) <= reltol * abs(total):
            return total, k
    raise RuntimeError(f"descending series: not converged after {max_terms} terms")


def cf_series_detailed(
    a, b, p, n: int, tol: float = 1e-15, max_terms: int = 100_000
) -> SeriesEvaluation:
    """Single-series representation with branch selection; needs b^p != a.

    Ascending branch (y = b^p/a < 1):   (1/(a b^n n!)) sum_{k>=0} (-pk)_n (-y)^k
    Descending branch (x = a/b^p < 1): -(1/(a b^n n!)) sum_{k>=1} (pk)_n (-x)^k

    Published form corrections applied here: prefactor n! (not n+1) and
    the descending sum starts at k = 1 (its k = 0 term comes from
    1/Gamma(0) = 0 in the derivation, so the printed k = 0 start adds a
    spurious 1 at n = 0). At b^p = a neither branch converges; use
    cf_via_q, which is exact there.
    """
    _check_domain(a, b, p, n)
    if not a > 0:
        raise ValueError("cf_series needs a > 0 (the prefactor divides by a)")
    power, power_exact = _b_to_p(b, p)
    if power_exact and _exact_scalars(a):
        y = Fraction(power) / Fraction(a)
    else:
        y = Fraction(float(power) / float(a))
    if y == 1:
        raise ValueError("cf_series: b^p = a is the series boundary; use cf_via_q")
    pf = Fraction(p)
    scale = float(a) * float(b) ** n * factorial(n)
    if y < 1:
        total, terms = q_series_with_terms(n, y, pf, tol=tol, max_terms=max_terms)
        return SeriesEvaluation(total / scale, "ascending", float(y), terms)
    total, terms = _descending_sum(n, 1 / y, pf, tol, max_terms)
    return SeriesEvaluation(-float(total) / scale, "descending", float(y), terms)


def cf_series(a, b, p, n: int, tol: float = 1e-15, max_terms: int = 100_000) -> float:
    return cf_series_detailed(a, b, p, n, tol, max_terms).value


def cf_series_as_printed(
    a, b, p, n: int, tol: float = 1e-15, max_terms: int = 100_000
) -> float:
    """The published single series, evaluated verbatim: prefactor n+1 and
    both branches starting at k = 0.

    Exists for errata measurement: for n >= 1 the ratio to the corrected
    series is n!/(n+1) on either branch; the descending n = 0 case picks
    up the spurious k = 0 term as well.
    """
    _check_domain(a, b, p, n)
    if not a > 0:
        raise ValueError("cf_series_as_printed needs a > 0")
    power, power_exact = _b_to_p(b, p)
    if power_exact and _exact_scalars(a):
        y = Fraction(power) / Fraction(a)
    else:
        y = Fraction(float(power) / float(a))
    if y == 1:
        raise ValueError("cf_series_as_printed: b^p = a diverges")
    pf = Fraction(p)
    scale = float(a) * float(b) ** n * (n + 1)
    if y < 1:
        total, _ = q_series_with_terms(n, y, pf, tol=tol, max_terms=max_terms)
        return total / scale
    total, _ = _descending_sum(n, 1 / y, pf, tol, max_terms)
    if n == 0:
        total += 1  # the printed k = 0 term, (p*0)_0 = 1
    return -float(total) / scale


def cf_via_q(a, b, p, n: int):
    """Closed form through Q: cf = Q(n, b^p/a, p) / (a b^n n!), b^p <= a.

    The only route that covers the boundary b^p = a (where y = 1 and
    Q's closed form still applies); published with the same (n+1)
    prefactor slip, corrected to n! here. Exact Fraction result when
    a, b, p and b^p are all rational.
    """
    _check_domain(a, b, p, n)
    if not a > 0:
        raise ValueError("cf_via_q needs a > 0")
    power, power_exact = _b_to_p(b, p)
    if power_exact:
        y = Fraction(power) / Fraction(a)
        if y > 1:
            raise ValueError(f"cf_via_q needs b^p <= a, got y = {float(y)!r}")
        value = q_stirling(n, y, Fraction(p)) / (Fraction(a) * Fraction(b) ** n * factorial(n))
        return value if _exact_scalars(a, b, p) else float(value)
    y = float(power) / float(a)
    if y > 1:
        raise ValueError(f"cf_via_q needs b^p <= a, got y = {y!r}")
    value = q_stirling(n, Fraction(y), Fraction(p))
    return float(value) / (float(a) * float(b) ** n * factorial(n))


def cf_half_reduction_check(a, b, n: int, tol: float = 1e-10) -> bool:
    """Does cf at p = 1/2 reproduce C2(n; a, b)?

    Compares cf_double_sum against the terminating closed form of C2;
    when both sides come out as Fractions the comparison is exact and
    tol is irrelevant.
    """
    lhs = cf_double_sum(a, b, Fraction(1, 2), n)
    rhs = c2_hyp_closed(a, b, n)
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return lhs == rhs
    lhs, rhs = float(lhs), float(rhs)
    return abs(lhs - rhs) <= tol * abs(rhs)
