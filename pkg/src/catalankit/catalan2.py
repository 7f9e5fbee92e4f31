"""Representations of the Catalan numbers of the second kind.

C2(n; a, b) is the coefficient of x^n in the generating function
1/(a + sqrt(b - x)), for a >= 0 and b > 0. Several published closed
forms exist for it, along with an integral representation; this module
implements all of them so they can be cross-checked against each other.

Normalization: the published closed forms and the published value table
carry an extra factor pi relative to the generating function (whose
integral representation includes a 1/pi prefactor). The library treats
the generating-function convention, where C2(0; a, b) = 1/(a+sqrt(b)),
as canonical; Normalization.PRINTED_PI reproduces the printed forms.

Return types: operations built from terminating sums return Fraction
when the inputs are rational scalars (int or Fraction), sqrt(b) is
rational, and the normalization is pi-free; float otherwise.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact import catalan, double_factorial, exact_sqrt
from .hyper import assoc_legendre_p, gauss_2f1, jacobi_p
from .quad import HalflineIntegrand, QuadResult, integrate_halfline
from .series import gf_catalan2

__all__ = [
    "Normalization",
    "LegendreVariant",
    "TableCheckRow",
    "c2_double_factorial_sum",
    "c2_quadrature",
    "c2_hyp_closed",
    "c2_hyp_unbounded",
    "c2_jacobi",
    "c2_legendre",
    "c2_gf_coefficient",
    "c2_table_check",
]


class Normalization(enum.Enum):
    """Scale convention for the closed forms (values are CLI tokens)."""

    GENERATING_FUNCTION = "gf"
    PRINTED_PI = "paper"


class LegendreVariant(enum.Enum):
    """The two non-identical published Legendre-form prefactors."""

    EQ0B = "eq0b"
    SEC2 = "sec2"


def _check_domain(a, b, n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if not a >= 0:
        raise ValueError(f"a must be >= 0, got {a!r}")
    if not b > 0:
        raise ValueError(f"b must be > 0, got {b!r}")


def _exact_scalars(*xs) -> bool:
    return all(isinstance(x, (int, Fraction)) for x in xs)


def _sqrt_b(b):
    """(sqrt(b), is_exact); Fraction root when one exists, else float."""
    root = exact_sqrt(Fraction(b))
    if root is not None:
        return root, True
    return math.sqrt(b), False


def _norm_factor(norm: Normalization):
    return math.pi if norm is Normalization.PRINTED_PI else 1


def c2_double_factorial_sum(a, b, n: int):
    """Finite double-factorial sum for C2(n; a, b).

    sum_{k=0..n} binom(2n-k-1, 2(n-k)) k! (2(n-k)-1)!! / (1+a/sqrt(b))^(k+1),
    all over (2n)!! b^(n+1/2). Conventions: (-1)!! = 1, and the n=k=0
    binomial binom(-1, 0) = 1; both are forced by the n=0 value
    1/(a+sqrt(b)). Generating-function normalization by construction.
    """
    _check_domain(a, b, n)
    root, root_exact = _sqrt_b(b)
    if root_exact:
        base = 1 + Fraction(a) / root
        scale = double_factorial(2 * n) * Fraction(b) ** n * root
    else:
        base = 1.0 + float(a) / root
        scale = double_factorial(2 * n) * float(b) ** n * root
    total = base * 0
    for k in range(n + 1):
        top, bot = 2 * n - k - 1, 2 * (n - k)
        weight = (1 if bot == 0 else 0) if top < 0 else comb(top, bot)
        if weight:
            weight *= factorial(k) * double_factorial(2 * (n - k) - 1)
            total += weight / base ** (k + 1)
    value = total / scale
    return value if root_exact and _exact_scalars(a, b) else float(value)


def c2_quadrature(a, b, n: int, tol: float = 1e-10) -> QuadResult:
    """C2(n; a, b) as (1/pi) * integral of sqrt(t)/((a^2+t)(b+t)^(n+1)).

    Requires a > 0: at a = 0 the integrand endpoint exponent drops to
    -1/2 and the other representations cover that case.
    """
    _check_domain(a, b, n)
    if not a > 0:
        raise ValueError("c2_quadrature needs a > 0")
    a2, bf, power = float(a) ** 2, float(b), n + 1

    def f(t: float) -> float:
        return math.sqrt(t) / ((a2 + t) * (bf + t) ** power)

    raw = integrate_halfline(
        HalflineIntegrand(f, endpoint_exponent=0.5, decay_exponent=n + 1.5),
        tol=tol,
    )
    return QuadResult(raw.value / math.pi, raw.abs_err_est / math.pi, raw.evaluations)


def c2_hyp_closed(a, b, n: int, norm: Normalization = Normalization.GENERATING_FUNCTION):
    """Terminating-2F1 closed form.

    C_n * K / (2 sqrt(b))^n * (a+sqrt(b))^(-n-1)
        * 2F1(1-n, n; n+2; (sqrt(b)-a)/(2 sqrt(b))),
    K = 1 (gf) or pi (printed). At n = 0 the second upper parameter is 0
    and the 2F1 is 1, extending the published n >= 1 range.
    """
    _check_domain(a, b, n)
    root, root_exact = _sqrt_b(b)
    if root_exact:
        aa = Fraction(a)
        z = (root - aa) / (2 * root)
        pref = catalan(n) / ((2 * root) ** n * (aa + root) ** (n + 1))
    else:
        aa = float(a)
        z = (root - aa) / (2 * root)
        pref = catalan(n) / ((2 * root) ** n * (aa + root) ** (n + 1))
    value = pref * gauss_2f1(1 - n, n, n + 2, z) * _norm_factor(norm)
    exact = root_exact and _exact_scalars(a, b) and norm is Normalization.GENERATING_FUNCTION
    return value if exact else float(value)


def c2_hyp_unbounded(
    a, b, n: int, norm: Normalization = Normalization.GENERATING_FUNCTION
) -> float:
    """Non-terminating 2F1 form, valid only for |1 - b/a^2| < 1.

    C_n * K / 2^(2n+1) * b^(1/2-n) / a^2 * 2F1(1, 3/2; n+2; 1 - b/a^2).
    Exists as a cross-check against the terminating closed form on the
    shared domain; the series does not terminate, so the result is float.
    """
    _check_domain(a, b, n)
    if not a > 0:
        raise ValueError("c2_hyp_unbounded needs a > 0")
    af, bf = float(a), float(b)
    z = 1.0 - bf / af**2
    if not abs(z) < 1:
        raise ValueError(f"c2_hyp_unbounded needs |1 - b/a^2| < 1, got {z!r}")
    pref = catalan(n) / 2 ** (2 * n + 1) * bf ** (0.5 - n) / af**2
    return float(pref * gauss_2f1(1.0, 1.5, n + 2, z) * _norm_factor(norm))


def c2_jacobi(a, b, n: int, norm: Normalization = Normalization.GENERATING_FUNCTION):
    """Jacobi-polynomial form, n >= 1 (the prefactor divides by n).

    K / (n (2 sqrt(b))^n) * (a+sqrt(b))^(-n-1) * P_{n-1}^{(n+1, -n-1)}(a/sqrt(b)).
    Equivalent to the terminating closed form via binom(2n, n-1) = n C_n.
    """
    _check_domain(a, b, n)
    if n < 1:
        raise ValueError("c2_jacobi needs n >= 1")
    root, root_exact = _sqrt_b(b)
    aa = Fraction(a) if root_exact else float(a)
    pref = 1 / (n * (2 * root) ** n * (aa + root) ** (n + 1))
    value = pref * jacobi_p(n - 1, n + 1, -n - 1, aa / root) * _norm_factor(norm)
    exact = root_exact and _exact_scalars(a, b) and norm is Normalization.GENERATING_FUNCTION
    return value if exact else float(value)


def c2_legendre(
    a,
    b,
    n: int,
    variant: LegendreVariant,
    norm: Normalization = Normalization.GENERATING_FUNCTION,
) -> float:
    """The two published associated-Legendre forms, evaluated verbatim.

    Both use P_{n-1}^{-n-1}(a/sqrt(b)) and need 0 < a < sqrt(b), n >= 1.
      SEC2: C_n * K / (2 sqrt(b))^n * Gamma(n+2) / (b-a^2)^((n+1)/2) * P
      EQ0B: C_n * (a/(2 sqrt(b)))^n * Gamma(n+2) / (sqrt(b)-a)^(2n+1) * P
    The printed EQ0B prefactor carries no pi, so `norm` does not affect
    it. The two variants disagree; the errata report measures both
    against the quadrature oracle rather than presuming either.
    """
    _check_domain(a, b, n)
    if n < 1:
        raise ValueError("c2_legendre needs n >= 1")
    af, bf = float(a), float(b)
    root = math.sqrt(bf)
    if not 0 < af < root:
        raise ValueError("c2_legendre needs 0 < a < sqrt(b)")
    p_val = assoc_legendre_p(n - 1, -n - 1, af / root)
    gam = factorial(n + 1)
    if variant is LegendreVariant.SEC2:
        pref = (
            catalan(n)
            * _norm_factor(norm)
            / (2 * root) ** n
            * gam
            / (bf - af**2) ** ((n + 1) / 2)
        )
    elif variant is LegendreVariant.EQ0B:
        pref = catalan(n) * (af / (2 * root)) ** n * gam / (root - af) ** (2 * n + 1)
    else:
        raise ValueError(f"unknown Legendre variant {variant!r}")
    return float(pref * p_val)


def c2_gf_coefficient(a, b, n: int):
    """Coefficient n of the Maclaurin series of 1/(a + sqrt(b - x)).

    Independent of every closed form above: computed by Newton iteration
    on the series square root and reciprocal.
    """
    _check_domain(a, b, n)
    value = gf_catalan2(a, b, n + 1).coefficient(n)
    return value if _exact_scalars(a, b) and isinstance(value, Fraction) else float(value)


# Published value table for n = 0..5: numerator terms (coeff, a_power,
# sqrt_b_power), denominator constant, denominator power of sqrt(b). The
# n = 4 entry is printed with the base b missing from its b^(7/2) factor;
# restored here (dimensional repair, confirmed by the pi-ratio check).
_PRINTED_TABLE = (
    (((1, 0, 0),), 1, 0),
    (((1, 0, 0),), 2, 1),
    (((1, 1, 0), (3, 0, 1)), 8, 3),
    (((1, 2, 0), (4, 1, 1), (5, 0, 2)), 16, 5),
    (((5, 3, 0), (25, 2, 1), (47, 1, 2), (35, 0, 3)), 128, 7),
    (((7, 4, 0), (42, 3, 1), (102, 2, 2), (122, 1, 3), (63, 0, 4)), 256, 9),
)


def printed_table_value(a, b, n: int) -> float:
    """Entry n of the published table of the first six C2 values.

    Evaluated verbatim (including the overall factor pi) apart from the
    n = 4 denominator repair noted above.
    """
    if not 0 <= n < len(_PRINTED_TABLE):
        raise ValueError(f"printed table covers n = 0..5, got {n}")
    _check_domain(a, b, n)
    terms, const, bpow = _PRINTED_TABLE[n]
    af, sb = float(a), math.sqrt(float(b))
    num = math.fsum(c * af**i * sb**j for c, i, j in terms)
    return math.pi * num / (const * (af + sb) ** (n + 1) * sb**bpow)


@dataclass(frozen=True)
class TableCheckRow:
    """One (n, a, b) comparison of the printed table against quadrature."""

    n: int
    a: float
    b: float
    printed: float
    quadrature: float
    ratio: float

    @property
    def ratio_error(self) -> float:
        """|ratio - pi|; the published table should sit at exactly pi."""
        return abs(self.ratio - math.pi)


_TABLE_GRID = ((1.0, 1.0), (1.0, 4.0), (0.5, 0.25), (2.0, 1.0), (0.3, 2.0))


def c2_table_check(pairs=_TABLE_GRID, tol: float = 1e-10) -> list[TableCheckRow]:
    """Ratio printed-table / quadrature for n = 0..5 over a small grid.

    Every ratio is expected to equal pi: the published table is
    internally consistent but sits a factor pi above the generating
    function it is derived from.
    """
    rows = []
    for a, b in pairs:
        for n in range(len(_PRINTED_TABLE)):
            printed = printed_table_value(a, b, n)
            quad = c2_quadrature(a, b, n, tol=tol).value
            rows.append(TableCheckRow(n, float(a), float(b), printed, quad, printed / quad))
    return rows
