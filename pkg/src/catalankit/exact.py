"""Exact integer and rational combinatorics used across the package.

Everything here is computed in arbitrary-precision integer or rational
arithmetic (``int`` / ``fractions.Fraction``), so results are exact and
suitable as oracles for the floating-point representations elsewhere.

Conventions the rest of the package relies on:

* ``double_factorial(-1) == 1`` and ``double_factorial(0) == 1``, so sums
  whose last term involves (-1)!! stay well defined.
* ``stirling_first`` / ``stirling_second`` return 0 when k is outside
  0..n instead of raising, which keeps triangular sums free of bounds
  checks.
* ``stirling_first`` returns the signed numbers s(n, k).
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "catalan",
    "catalan_formulas",
    "catalan_stream",
    "double_factorial",
    "rising_factorial",
    "falling_factorial",
    "stirling_first",
    "stirling_second",
    "geometric_polynomial",
    "geometric_inverse_check",
    "polylog_neg",
    "exact_sqrt",
    "exact_pow",
    "Polynomial",
    "RationalFunction",
]


def catalan_formulas(n: int) -> dict[str, Fraction]:
    """C_n by each closed formula separately, keyed by formula name.

    The four routes: factorial quotient, central binomial over n+1, the
    half-integer Gamma-ratio rearranged into an exact rational, and the
    terminating 2F1(-n, 1-n; 2; 1) sum.
    """
    if n < 0:
        raise ValueError("catalan: n must be >= 0")
    quotient = Fraction(factorial(2 * n), factorial(n) * factorial(n + 1))
    central = Fraction(comb(2 * n, n), n + 1)
    # 4^n * Gamma(n + 1/2) / (sqrt(pi) * Gamma(n + 2)), with
    # Gamma(n + 1/2) / sqrt(pi) = (2n)! / (4^n n!) kept as an exact rational.
    gamma_half_ratio = Fraction(factorial(2 * n), 4**n * factorial(n))
    gamma_form = 4**n * gamma_half_ratio / factorial(n + 1)
    # 2F1(-n, 1-n; 2; 1): term k reduces to C(n,k) C(n-1,k) / (k+1),
    # terminating at k = n - 1 for n >= 1 (the k = n term carries a zero
    # Pochhammer factor); the empty product at n = 0 is 1.
    if n == 0:
        hyp_form = Fraction(1)
    else:
        hyp_form = sum(
            Fraction(comb(n, k) * comb(n - 1, k), k + 1) for k in range(n)
        )
    return {
        "factorial_quotient": quotient,
        "central_binomial": central,
        "gamma_ratio": gamma_form,
        "terminating_2f1": hyp_form,
    }


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """Catalan number C_n, with all four formulas asserted equal first."""
    forms = catalan_formulas(n)
    values = set(forms.values())
    assert len(values) == 1, f"catalan formulas disagree at n={n}: {forms}"
    return int(values.pop())


def catalan_stream(count: int) -> list[int]:
    """First ``count`` Catalan numbers via C_{n+1} = 2(2n+1) C_n / (n+2)."""
    if count < 0:
        raise ValueError("catalan_stream: count must be >= 0")
    out: list[int] = []
    c = 1
    for n in range(count):
        out.append(c)
        c = c * 2 * (2 * n + 1) // (n + 2)
    return out


def double_factorial(n: int) -> int:
    """n!! for n >= -1, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double_factorial: n must be >= -1")
    return math.prod(range(n, 1, -2))


def rising_factorial(x, n: int):
    """Pochhammer symbol (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.

    Works for int, Fraction and float arguments alike.
    """
    if n < 0:
        raise ValueError("rising_factorial: n must be >= 0")
    out = 1
    for i in range(n):
        out = out * (x + i)
    return out


def falling_factorial(x, n: int):
    """Falling factorial x (x-1) ... (x-n+1); equals (-1)^n (-x)_n."""
    if n < 0:
        raise ValueError("falling_factorial: n must be >= 0")
    out = 1
    for i in range(n):
        out = out * (x - i)
    return out


_stirling_lock = threading.Lock()
_s1_rows: list[tuple[int, ...]] = [(1,)]
_s2_rows: list[tuple[int, ...]] = [(1,)]


def _grow_stirling(rows: list[tuple[int, ...]], n: int, first_kind: bool) -> None:
    with _stirling_lock:
        while len(rows) <= n:
            m = len(rows) - 1
            prev = rows[-1]
            nxt = [0] * (m + 2)
            for k in range(m + 2):
                left = prev[k - 1] if 0 <= k - 1 <= m else 0
                here = prev[k] if k <= m else 0
                nxt[k] = (left - m * here) if first_kind else (k * here + left)
            rows.append(tuple(nxt))


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k); 0 out of range."""
    if n < 0:
        raise ValueError("stirling_first: n must be >= 0")
    if k < 0 or k > n:
        return 0
    if n >= len(_s1_rows):
        _grow_stirling(_s1_rows, n, first_kind=True)
    return _s1_rows[n][k]


def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k); 0 out of range."""
    if n < 0:
        raise ValueError("stirling_second: n must be >= 0")
    if k < 0 or k > n:
        return 0
    if n >= len(_s2_rows):
        _grow_stirling(_s2_rows, n, first_kind=False)
    return _s2_rows[n][k]


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are stripped,
    and the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate by Horner's rule; composes when x is a Polynomial."""
        acc = Polynomial() if isinstance(x, Polynomial) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == _as_poly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        parts = [f"{c}*x^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(parts) + ")"


def _as_poly(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def _poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, a.degree - b.degree + 1)
    rem = list(a.coeffs)
    db, lead = b.degree, b.coeffs[-1]
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        shift = len(rem) - 1 - db
        factor = rem[-1] / lead
        q[shift] = factor
        for i in range(db + 1):
            rem[shift + i] -= factor * b.coeffs[i]
        rem.pop()
    return Polynomial(q), Polynomial(rem)


def _poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        _, r = _poly_divmod(a, b)
        a, b = b, r
    return a.monic()


class RationalFunction:
    """Quotient of two Polynomials, stored reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = _as_poly(num), _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Polynomial([1])
        else:
            g = _poly_gcd(num, den)
            if g.degree > 0:
                num, _ = _poly_divmod(num, g)
                den, _ = _poly_divmod(den, g)
        lead = den.coeffs[-1]
        self.num = num * (1 / Fraction(lead))
        self.den = den.monic()

    def __add__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_ratfun(other))

    def __rsub__(self, other):
        return _as_ratfun(other) + (-self)

    def __mul__(self, other):
        other = _as_ratfun(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def derivative(self) -> RationalFunction:
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        """Evaluate at a number, or substitute when x is a Polynomial."""
        if isinstance(x, Polynomial):
            return RationalFunction(self.num(x), self.den(x))
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError("rational function pole")
        return self.num(x) / d

    def __eq__(self, other):
        other = _as_ratfun(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _as_ratfun(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(_as_poly(x))


def geometric_polynomial(n: int) -> Polynomial:
    """Geometric polynomial w_n(x) = sum_k S(n, k) k! x^k."""
    if n < 0:
        raise ValueError("geometric_polynomial: n must be >= 0")
    return Polynomial([stirling_second(n, k) * factorial(k) for k in range(n + 1)])


def geometric_inverse_check(n: int) -> bool:
    """Verify x^n = (1/n!) sum_k s(n, k) w_k(x) exactly.

    Follows from w_k(x) = sum_j S(k, j) j! x^j and the orthogonality of
    the two Stirling kinds; s(n, k) carries its sign already.
    """
    if n < 0:
        raise ValueError("geometric_inverse_check: n must be >= 0")
    acc = Polynomial()
    for k in range(n + 1):
        acc = acc + stirling_first(n, k) * geometric_polynomial(k)
    return acc == Polynomial.monomial(n, factorial(n))


@lru_cache(maxsize=None)
def polylog_neg(k: int) -> RationalFunction:
    """Negative-order polylogarithm Li_{-k}(x) as an exact rational function.

    Li_0(x) = x/(1-x) and Li_{-k}(x) = x * d/dx Li_{-k+1}(x), so each
    Li_{-k} has denominator (1-x)^(k+1); for |x| < 1 it sums the series
    sum_{j>=1} j^k x^j.
    """
    if k < 0:
        raise ValueError("polylog_neg: order parameter k must be >= 0")
    if k == 0:
        return RationalFunction(Polynomial([0, 1]), Polynomial([1, -1]))
    return polylog_neg(k - 1).derivative() * Polynomial([0, 1])


def exact_sqrt(q) -> Fraction | None:
    """Exact rational square root of a nonnegative rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def exact_pow(base, exponent) -> Fraction | None:
    """base**exponent as an exact Fraction when one exists, else None.

    base must be a positive rational and exponent rational; the result
    exists exactly when the denominator-root of base is rational.
    """
    base, exponent = Fraction(base), Fraction(exponent)
    if base <= 0:
        return None
    if exponent == 0:
        return Fraction(1)
    num, den = exponent.numerator, exponent.denominator
    rn = _int_nth_root(base.numerator, den)
    rd = _int_nth_root(base.denominator, den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd) ** num


def _int_nth_root(m: int, n: int) -> int | None:
    """Integer r with r**n == m, or None. Newton iteration, overflow safe."""
    if m < 0:
        return None
    if m < 2 or n == 1:
        return m
    if n > m.bit_length():
        return None  # would need a root >= 2, but 2**n already exceeds m
    x = 1 << -(-m.bit_length() // n)
    while True:
        y = ((n - 1) * x + m // x ** (n - 1)) // n
        if y >= x:
            break
        x = y
    return x if x**n == m else None
