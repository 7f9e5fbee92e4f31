"""Formal power series: Catalan generating functions by Newton iteration."""

import math
from fractions import Fraction

import pytest

from catalankit.exact import catalan
from catalankit.series import PowerSeries, gf_catalan, gf_catalan2, series_mul


def test_catalan_gf_coefficients():
    s = gf_catalan(12)
    for n in range(12):
        assert s.coefficient(n) == catalan(n)
    assert s.exact


def test_gf_self_consistency():
    # c(x) satisfies c = 1 + x c^2
    order = 10
    c = gf_catalan(order)
    c2 = series_mul(c, c)
    for n in range(1, order):
        assert c.coefficient(n) == c2.coefficient(n - 1)
    assert c.coefficient(0) == 1


def test_gf_catalan2_exact_rational_b():
    s = gf_catalan2(1, 4, 6)
    assert s.exact
    assert s.coefficient(0) == Fraction(1, 3)
    assert s.coefficient(1) == Fraction(1, 36)
    assert s.coefficient(2) == Fraction(7, 1728)


def test_gf_catalan2_reduces_to_catalan():
    s = gf_catalan2(Fraction(1, 2), Fraction(1, 4), 10)
    for n in range(10):
        assert s.coefficient(n) == catalan(n)


def test_gf_catalan2_float_fallback():
    s = gf_catalan2(1.0, 2.0, 8)
    assert not s.exact
    # against the closed form 1/(a + sqrt(b - x)) differentiated once:
    # coefficient 1 = 1 / (2 sqrt(b) (a + sqrt(b))^2)
    want = 1.0 / (2 * math.sqrt(2.0) * (1 + math.sqrt(2.0)) ** 2)
    assert s.coefficient(1) == pytest.approx(want, rel=1e-14)


def test_gf_catalan2_domain():
    with pytest.raises(ValueError):
        gf_catalan2(1, 0, 4)
    with pytest.raises(ValueError):
        gf_catalan2(-1, 4, 4)


def test_power_series_accessors():
    s = PowerSeries((Fraction(1), Fraction(2)))
    assert s.order == 2
    assert s.exact
    assert not PowerSeries((1.0, 2.0)).exact
    assert s.coefficient(1) == 2
    with pytest.raises(IndexError):
        s.coefficient(5)
