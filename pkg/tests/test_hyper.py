"""Hypergeometric series, Jacobi and associated Legendre evaluation."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalankit.exact import rising_factorial
from catalankit.hyper import (
    HypConvergenceError,
    HypTermination,
    HypergeometricError,
    assoc_legendre_p,
    gauss_2f1,
    jacobi_p,
    pfq_series,
)

mpmath.mp.dps = 30


def test_terminating_2f1_is_exact():
    v = gauss_2f1(-3, -2, 2, 1)
    assert isinstance(v, Fraction)
    assert v == 5


@given(
    st.integers(min_value=0, max_value=8),
    st.fractions(min_value=Fraction(-3), max_value=3),
    st.fractions(min_value=Fraction(1, 4), max_value=4),
)
@settings(max_examples=50)
def test_chu_vandermonde(n, b, c):
    # 2F1(-n, b; c; 1) = (c-b)_n / (c)_n, valid since c > 0 here
    lhs = gauss_2f1(-n, b, c, 1)
    assert lhs == rising_factorial(c - b, n) / rising_factorial(c, n)


@pytest.mark.parametrize(
    "a, b, c, z",
    [
        (0.5, 1.5, 2.5, 0.3),
        (1.0, 2.0, 3.5, -0.4),
        (0.25, 0.75, 1.25, 0.6),
        (2.0, 1.0, 4.0, 0.85),
    ],
)
def test_convergent_2f1_against_mpmath(a, b, c, z):
    got = gauss_2f1(a, b, c, z)
    want = float(mpmath.hyp2f1(a, b, c, z))
    assert got == pytest.approx(want, rel=1e-13)


def test_pfq_3f2_against_mpmath():
    got = pfq_series((0.5, 1.0, 1.5), (2.0, 2.5), 0.4)
    want = float(mpmath.hyper([0.5, 1.0, 1.5], [2.0, 2.5], 0.4))
    assert got == pytest.approx(want, rel=1e-13)


def test_lower_parameter_pole_rejected():
    with pytest.raises(HypergeometricError):
        gauss_2f1(0.5, 0.5, -2, 0.3)
    # but a terminating series may stop before reaching the pole
    v = gauss_2f1(-2, 1, Fraction(-7, 2), 1)
    assert isinstance(v, Fraction)


def test_divergent_argument_rejected():
    with pytest.raises(HypergeometricError):
        gauss_2f1(0.5, 1.5, 2.5, 1.2)


def test_convergence_budget_enforced():
    with pytest.raises(HypConvergenceError):
        pfq_series(
            (0.5, 1.5), (2.5,), 0.999, HypTermination.convergent(1e-15, max_terms=10)
        )


@pytest.mark.parametrize(
    "n, alpha, beta, x",
    [
        (0, 1.0, 2.0, 0.3),
        (1, 0.5, -0.5, 0.7),
        (3, 2.0, 1.0, -0.2),
        (4, 3.0, -2.0, 0.5),
    ],
)
def test_jacobi_against_mpmath(n, alpha, beta, x):
    got = float(jacobi_p(n, alpha, beta, x))
    want = float(mpmath.jacobi(n, alpha, beta, x))
    assert got == pytest.approx(want, rel=1e-12, abs=1e-12)


def test_jacobi_exact_rational():
    assert jacobi_p(2, 4, -4, Fraction(0)) == Fraction(15, 2)
    assert isinstance(jacobi_p(3, 1, 1, Fraction(1, 2)), Fraction)


@pytest.mark.parametrize(
    "nu, mu, x",
    [
        (0, -2, 0.5),
        (1, -2, 0.5),
        (1, -3, 0.25),
        (2, -4, 0.8),
        (4, -6, 0.6),
    ],
)
def test_assoc_legendre_against_mpmath(nu, mu, x):
    got = assoc_legendre_p(nu, mu, x)
    want = float(mpmath.legenp(nu, mu, x))
    assert got == pytest.approx(want, rel=1e-11)


def test_assoc_legendre_closed_forms():
    # P_0^(-2)(x) = ((1-x)/(1+x))/2, P_1^(-2)(x) = ((1-x)/(1+x)) (2+x)/6
    x = 0.5
    assert assoc_legendre_p(0, -2, x) == pytest.approx(1 / 6, rel=1e-13)
    assert assoc_legendre_p(1, -2, x) == pytest.approx(5 / 36, rel=1e-13)


def test_assoc_legendre_domain():
    with pytest.raises(ValueError):
        assoc_legendre_p(1, -2, 1.0)
    with pytest.raises(ValueError):
        assoc_legendre_p(1, -2, 0.0)
