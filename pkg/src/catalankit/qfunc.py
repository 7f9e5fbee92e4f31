"""The auxiliary series Q(n, y, p) behind the Catalan functional.

Q(n, y, p) = sum_{k>=0} (-pk)_n (-y)^k with (x)_n the rising factorial,
for n >= 0, y in [0, 1], p in (0, 1). The series converges only for
y < 1, but Q extends to y = 1 through its closed forms, which are exact
rational functions of y. Routes provided:

  q_series      direct summation with a proven tail bound (y < 1)
  q_stirling    geometric-polynomial closed form (valid at y = 1)
  q_polylog     negative-order-polylogarithm closed form (n >= 1)
  q_rational*   the closed forms as RationalFunction objects in y
  q_hyp         a published hypergeometric form, evaluated verbatim for
                comparison only: its prefactor disagrees with the other
                routes (at n = 1 by exactly y^-3) and the comparison is
                reported rather than asserted

plus the identity checks used to justify the closed forms (recurrence,
termwise derivative form, series transform, Pochhammer derivatives, and
the z = y+1 bracket polynomials).

Exact summation: the series terms grow to ~1e7 before decaying (e.g.
y = 0.9, n = 6) while the sum stays O(1), so float accumulation loses
about seven digits to cancellation. All summation here runs in Fraction
arithmetic (every float is a dyadic rational) and rounds once at the end.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

from .exact import (
    Polynomial,
    RationalFunction,
    falling_factorial,
    geometric_polynomial,
    polylog_neg,
    rising_factorial,
    stirling_first,
    stirling_second,
)
from .hyper import HypTermination, pfq_series

__all__ = [
    "q_series",
    "q_series_with_terms",
    "series_tail_bound",
    "q_stirling",
    "q_polylog",
    "q_hyp",
    "q_rational",
    "q_rational_recurrence",
    "q_recurrence_value",
    "q_recurrence_check",
    "q_derivative_form_check",
    "boyadzhiev_check",
    "pochhammer_derivative_check",
    "zform_bracket",
    "zform_check",
]


def _check_n(n) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


def _check_p(p) -> None:
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p!r}")


def _exact_scalars(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def series_tail_bound(n: int, y: Fraction, p: Fraction, start: int) -> Fraction:
    """Upper bound on sum_{k>=start} |(-pk)_n| y^k, for 0 <= y < 1.

    Each factor of (-pk)_n is at most pk+n in magnitude, so the k-th
    term is bounded by B_k = (pk+n)^n y^k, and B_{k+1}/B_k <=
    y ((k+1)/k)^n for k >= 1. Once that ratio r drops below 1 the tail
    is at most B_k/(1-r); earlier bounds are added explicitly. The same
    bound covers |(pk)_n| (every factor is at most pk+n there too), so
    the descending-branch series shares it.
    """
    if y == 0:
        return Fraction(0)
    total = Fraction(0)
    k = max(start, 1)
    if start == 0 and n == 0:
        total += 1
    while y * Fraction(k + 1, k) ** n >= 1:
        total += (p * k + n) ** n * y**k
        k += 1
    ratio = y * Fraction(k + 1, k) ** n
    return total + (p * k + n) ** n * y**k / (1 - ratio)


def q_series_with_terms(
    n: int, y, p, tol: float = 1e-15, max_terms: int = 100_000
) -> tuple[float, int]:
    """(value, terms_used) for the defining series; needs 0 <= y < 1.

    Stops when the tail bound drops below tol * |partial sum|. The
    summation is exact, so the returned float is the correctly rounded
    partial sum and the tail bound is the whole error.
    """
    _check_n(n)
    _check_p(p)
    if not 0 <= y < 1:
        raise ValueError(f"q_series needs 0 <= y < 1 (diverges beyond), got {y!r}")
    yf, pf = Fraction(y), Fraction(p)
    if yf == 0:
        return (1.0 if n == 0 else 0.0), 1
    reltol = Fraction(tol if tol > 0 else 1e-15)
    total = Fraction(0)
    for k in range(max_terms):
        total += rising_factorial(-pf * k, n) * (-yf) ** k
        if total and series_tail_bound(n, yf, pf, k + 1) <= reltol * abs(total):
            return float(total), k + 1
    raise RuntimeError(f"q_series: not converged after {max_terms} terms")


def q_series(n: int, y, p, tol: float = 1e-15, max_terms: int = 100_000) -> float:
    return q_series_with_terms(n, y, p, tol, max_terms)[0]


def q_stirling(n: int, y, p):
    """Closed form via geometric polynomials; the route that covers y = 1.

    (-1)^(n+1) (y/(y+1)) sum_{k=1..n} s(n,k) (-p)^k omega_k(-1/(y+1)),
    with s the signed Stirling numbers of the first kind and omega_k the
    geometric polynomials; n = 0 is 1/(y+1) directly. Needs y > -1 only.
    Returns Fraction for rational y, p.
    """
    _check_n(n)
    _check_p(p)
    if not y > -1:
        raise ValueError(f"q_stirling needs y > -1, got {y!r}")
    yf, pf = Fraction(y), Fraction(p)
    if n == 0:
        value = 1 / (1 + yf)
    else:
        u = -1 / (1 + yf)
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += stirling_first(n, k) * (-pf) ** k * geometric_polynomial(k)(u)
        value = Fraction(-1) ** (n + 1) * (yf / (1 + yf)) * acc
    return value if _exact_scalars(y, p) else float(value)


def q_polylog(n: int, y, p):
    """Closed form via negative-order polylogarithms, n >= 1.

    (-1)^n sum_{k=1..n} s(n,k) Li_{-k}(-y) p^k. Independent of
    q_stirling's geometric polynomials. Returns Fraction for rational
    y, p.
    """
    _check_n(n)
    _check_p(p)
    if n == 0:
        raise ValueError("q_polylog covers n >= 1 only; n = 0 is 1/(y+1)")
    if not y >= 0:
        raise ValueError(f"q_polylog needs y >= 0, got {y!r}")
    yf, pf = Fraction(y), Fraction(p)
    acc = Fraction(0)
    for k in range(1, n + 1):
        acc += stirling_first(n, k) * polylog_neg(k)(-yf) * pf**k
    value = Fraction(-1) ** n * acc
    return value if _exact_scalars(y, p) else float(value)


def q_hyp(n: int, y, p, tol: float = 1e-15, max_terms: int = 100_000) -> float:
    """The published nFn-1 form, evaluated exactly as printed.

    (-1)^(n-1) p Gamma(n) / y^(2n)
        * nFn-1(1-(n-1)/p, ..., 1-1/p, 2; -(n-1)/p, ..., -1/p; -y).

    Comparison-only: the prefactor is inconsistent with the other routes
    (Q stays bounded as y -> 0 while y^(-2n) diverges; at n = 1 the
    ratio to the true value is y^-3). When some m/p is an integer the
    series terminates before any lower-parameter pole and is summed
    exactly; otherwise no lower parameter is ever a nonpositive integer
    and the series converges for y < 1.
    """
    _check_n(n)
    _check_p(p)
    if n < 1:
        raise ValueError("q_hyp needs n >= 1")
    if not 0 < y < 1:
        raise ValueError(f"q_hyp needs 0 < y < 1, got {y!r}")
    yf, pf = Fraction(y), Fraction(p)
    upper = tuple(1 - Fraction(m) / pf for m in range(n - 1, 0, -1)) + (Fraction(2),)
    lower = tuple(-Fraction(m) / pf for m in range(n - 1, 0, -1))
    terminates = any(u <= 0 and u.denominator == 1 for u in upper)
    term = None if terminates else HypTermination.convergent(tol, max_terms)
    f = pfq_series(upper, lower, -yf, term)
    pref = Fraction(-1) ** (n - 1) * pf * factorial(n - 1) / yf ** (2 * n)
    return float(pref * f)


def q_rational(n: int, p) -> RationalFunction:
    """Q(n, ., p) as an exact rational function of y, via polylogarithms."""
    _check_n(n)
    _check_p(p)
    pf = Fraction(p)
    if n == 0:
        return RationalFunction(1, Polynomial([1, 1]))
    minus_y = Polynomial([0, -1])
    acc = RationalFunction(0)
    for k in range(1, n + 1):
        acc = acc + polylog_neg(k)(minus_y) * (stirling_first(n, k) * pf**k)
    return acc * Fraction(-1) ** n


def q_rational_recurrence(n: int, p) -> RationalFunction:
    """Q(n, ., p) grown from Q(0) = 1/(y+1) by the recurrence

    Q(m+1) = -p y (d/dy) Q(m) + m Q(m),

    giving a route independent of both closed forms.
    """
    _check_n(n)
    _check_p(p)
    pf = Fraction(p)
    yy = Polynomial([0, 1])
    q = RationalFunction(1, Polynomial([1, 1]))
    for m in range(n):
        q = q.derivative() * (-pf) * yy + q * m
    return q


def q_recurrence_value(n: int, y, p):
    """Evaluate the recurrence-generated Q at the point (y, p)."""
    if not y >= 0:
        raise ValueError(f"q_recurrence_value needs y >= 0, got {y!r}")
    value = q_rational_recurrence(n, Fraction(p))(Fraction(y))
    return value if _exact_scalars(y, p) else float(value)


def q_recurrence_check(n: int, y, p) -> bool:
    """Symbolically verify Q(n+1) = -p y Q'(n) + n Q(n), then spot-check.

    Q(n) and Q(n+1) come from the polylogarithm route, the derivative is
    exact, and the spot value at y is compared against q_stirling, so a
    pass ties all three routes together at this n.
    """
    pf = Fraction(p)
    qn = q_rational(n, pf)
    lhs = q_rational(n + 1, pf)
    rhs = qn.derivative() * (-pf) * Polynomial([0, 1]) + qn * n
    if lhs != rhs:
        return False
    yf = Fraction(y)
    return lhs(yf) == q_stirling(n + 1, yf, pf)


def q_derivative_form_check(n: int, k_max: int, y, p) -> bool:
    """Termwise check of the derivative representation of the series.

    With w = -y, n y-derivatives of w^(pk) give (-1)^n <pk>_n w^(pk-n)
    (<.>_n the falling factorial), so (-y)^(k+n-pk) d^n/dy^n (-y)^(pk)
    must equal the series term coefficient (-pk)_n times (-y)^k. The
    exponent bookkeeping (pk-n) + (k+n-pk) = k is an identity, so the
    check compares coefficients for each k <= k_max, then confirms the
    resulting partial sum sits within the proven tail bound of the full
    series. Everything before the final comparison is exact.
    """
    _check_n(n)
    _check_p(p)
    if not 0 < y < 1:
        raise ValueError(f"q_derivative_form_check needs 0 < y < 1, got {y!r}")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    yf, pf = Fraction(y), Fraction(p)
    partial = Fraction(0)
    for k in range(k_max + 1):
        t = pf * k
        derivative_coeff = Fraction(-1) ** n * falling_factorial(t, n)
        series_coeff = rising_factorial(-t, n)
        if derivative_coeff != series_coeff:
            return False
        partial += series_coeff * (-yf) ** k
    full = Fraction(q_series(n, yf, pf, tol=1e-15))
    return abs(partial - full) <= series_tail_bound(n, yf, pf, k_max + 1) + Fraction(1e-15)


def boyadzhiev_check(f: Polynomial, y) -> bool:
    """Exact check of the series transform for a polynomial f, |y| < 1:

    sum_{k>=0} f(k) y^k = (1/(1-y)) sum_n (f^(n)(0)/n!) omega_n(y/(1-y)).

    The left side is closed via Li_{-j}: sum_k k^j y^k equals Li_{-j}(y)
    for j >= 1 and 1/(1-y) for j = 0. The right side differentiates f
    symbolically. Both sides are Fractions; equality is exact.
    """
    yf = Fraction(y)
    if not abs(yf) < 1:
        raise ValueError(f"boyadzhiev_check needs |y| < 1, got {y!r}")
    left = f.coefficient(0) / (1 - yf)
    for j in range(1, f.degree + 1):
        if f.coefficient(j):
            left += f.coefficient(j) * polylog_neg(j)(yf)
    ratio = yf / (1 - yf)
    right = Fraction(0)
    d, order = f, 0
    while True:
        right += d(Fraction(0)) / factorial(order) * geometric_polynomial(order)(ratio)
        if d.degree <= 0:
            break
        d, order = d.derivative(), order + 1
    return left == right / (1 - yf)


def pochhammer_derivative_check(n: int, k: int) -> bool:
    """Check d^k/dy^k (-py)_n at y = 0 against (-1)^n k! s(n,k) p^k.

    (-py)_n = prod_{j<n} (j - py) is expanded as a polynomial in t = py,
    keeping p generic; k y-derivatives contribute p^k times k
    t-derivatives, so the p-free parts must satisfy
    (d^k/dt^k prod)(0) = (-1)^n k! s(n,k).
    """
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    prod = Polynomial([1])
    for j in range(n):
        prod = prod * Polynomial([j, -1])
    d = prod
    for _ in range(k):
        d = d.derivative()
    return d(Fraction(0)) == Fraction(-1) ** n * factorial(k) * stirling_first(n, k)


def zform_bracket(n: int) -> dict[tuple[int, int], Fraction]:
    """Bracket polynomial of the z = y+1 form, as {(z_pow, p_pow): coeff}.

    Q(n, y, p) = [p (z-1)/z^(n+1)] * T_n(z, p) with
    T_n = sum_{k=1..n} |s(n,k)| p^(k-1) z^(n-k) B_k(z) and
    B_k(z) = sum_{m=1..k} (-1)^(1-m) S(k,m) m! z^(k-m).
    """
    _check_n(n)
    if n < 1:
        raise ValueError("zform_bracket needs n >= 1")
    out: dict[tuple[int, int], Fraction] = {}
    for k in range(1, n + 1):
        size = abs(stirling_first(n, k))
        if not size:
            continue
        for m in range(1, k + 1):
            c = Fraction((-1) ** (1 - m) * stirling_second(k, m) * factorial(m) * size)
            key = (n - m, k - 1)
            out[key] = out.get(key, Fraction(0)) + c
    return {key: c for key, c in out.items() if c}


def zform_check(n: int) -> bool:
    """Verify the bracket identity against the polylogarithm route.

    Both sides are polynomials in p of degree <= n, so exact agreement
    as rational functions of y at n+2 distinct rational p values proves
    the identity in p as well.
    """
    bracket = zform_bracket(n)
    yy = Polynomial([0, 1])
    z_of_y = Polynomial([1, 1])
    den = Polynomial([1])
    for _ in range(n + 1):
        den = den * z_of_y
    for j in range(2, n + 4):
        pf = Fraction(1, j)
        coeffs = [Fraction(0)] * n
        for (zp, pp), c in bracket.items():
            coeffs[zp] += c * pf**pp
        t_at_p = Polynomial(coeffs)
        rhs = RationalFunction(yy * t_at_p(z_of_y) * pf, den)
        if q_rational(n, pf) != rhs:
            return False
    return True
