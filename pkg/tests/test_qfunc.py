"""The auxiliary series Q(n, y, p): closed forms, identities, published tables.

The partial-fraction table (n = 0..4) and the z = y+1 bracket rows
(n = 1..5) are transcribed from the published source; the n = 4 bracket
carries the degree repair -14z -> -14z^2 (see the errata command).
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalankit.exact import Polynomial, RationalFunction, rising_factorial
from catalankit.qfunc import (
    boyadzhiev_check,
    pochhammer_derivative_check,
    q_derivative_form_check,
    q_hyp,
    q_polylog,
    q_rational,
    q_rational_recurrence,
    q_recurrence_check,
    q_recurrence_value,
    q_series,
    q_series_with_terms,
    q_stirling,
    series_tail_bound,
    zform_bracket,
    zform_check,
)

# published partial-fraction table: entry n -> [(denominator power j of
# (y+1), numerator polynomial in p, coefficients ascending)], signs folded in
PRINTED_Q_TABLE = {
    0: [(1, [1])],
    1: [(2, [0, -1]), (1, [0, 1])],
    2: [(3, [0, 0, 2]), (2, [0, -1, -3]), (1, [0, 1, 1])],
    3: [
        (4, [0, 0, 0, -6]),
        (3, [0, 0, 6, 12]),
        (2, [0, -2, -9, -7]),
        (1, [0, 2, 3, 1]),
    ],
    4: [
        (5, [0, 0, 0, 0, 24]),
        (4, [0, 0, 0, -36, -60]),
        (3, [0, 0, 22, 72, 50]),
        (2, [0, -6, -33, -42, -15]),
        (1, [0, 6, 11, 6, 1]),
    ],
}

# published z-form bracket rows as {(z_power, p_power): coefficient};
# n = 4 includes the -14z^2 repair
PRINTED_ZFORM = {
    1: {(0, 0): 1},
    2: {(1, 0): 1, (1, 1): 1, (0, 1): -2},
    3: {(2, 0): 2, (2, 1): 3, (1, 1): -6, (2, 2): 1, (1, 2): -6, (0, 2): 6},
    4: {
        (3, 0): 6,
        (3, 1): 11, (2, 1): -22,
        (3, 2): 6, (2, 2): -36, (1, 2): 36,
        (3, 3): 1, (2, 3): -14, (1, 3): 36, (0, 3): -24,
    },
    5: {
        (4, 0): 24,
        (4, 1): 50, (3, 1): -100,
        (4, 2): 35, (3, 2): -210, (2, 2): 210,
        (4, 3): 10, (3, 3): -140, (2, 3): 360, (1, 3): -240,
        (4, 4): 1, (3, 4): -30, (2, 4): 150, (1, 4): -240, (0, 4): 120,
    },
}

P_SAMPLES = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(1, 7),
             Fraction(3, 7), Fraction(5, 11)]


def _table_rational(n: int, p: Fraction) -> RationalFunction:
    """Build the printed table entry as an exact rational function of y."""
    one_plus_y = Polynomial([1, 1])
    top_power = max(j for j, _ in PRINTED_Q_TABLE[n])
    den = Polynomial([1])
    for _ in range(top_power):
        den = den * one_plus_y
    num = Polynomial([])
    for j, coeffs in PRINTED_Q_TABLE[n]:
        c = sum(Fraction(ci) * p**i for i, ci in enumerate(coeffs))
        lift = Polynomial([c])
        for _ in range(top_power - j):
            lift = lift * one_plus_y
        num = num + lift
    return RationalFunction(num, den)


@pytest.mark.parametrize("n", sorted(PRINTED_Q_TABLE))
@pytest.mark.parametrize("p", P_SAMPLES)
def test_printed_table_matches_polylog_route(n, p):
    # both sides are rational in y; coefficients are degree-n in p, so
    # agreement at len(P_SAMPLES) >= n+2 sample values proves identity
    assert q_rational(n, p) == _table_rational(n, p)


@pytest.mark.parametrize("n", sorted(PRINTED_ZFORM))
def test_printed_zform_brackets(n):
    got = zform_bracket(n)
    want = {key: Fraction(c) for key, c in PRINTED_ZFORM[n].items()}
    assert got == want


@pytest.mark.parametrize("n", range(1, 6))
def test_zform_identity(n):
    assert zform_check(n)


@pytest.mark.parametrize("n", range(6))
def test_closed_forms_agree_exactly(n):
    for y in (Fraction(0), Fraction(1, 4), Fraction(9, 10), Fraction(1), Fraction(3)):
        for p in (Fraction(1, 2), Fraction(2, 7)):
            stirling = q_stirling(n, y, p)
            assert isinstance(stirling, Fraction)
            assert q_recurrence_value(n, y, p) == stirling
            if n >= 1:
                assert q_polylog(n, y, p) == stirling


def test_known_spot_values():
    assert q_stirling(0, Fraction(1), Fraction(1, 2)) == Fraction(1, 2)
    assert q_stirling(1, Fraction(1), Fraction(1, 2)) == Fraction(1, 8)
    # Q(n >= 1, 0, p) = 0 and Q(0, 0, p) = 1
    for n in range(1, 5):
        assert q_stirling(n, Fraction(0), Fraction(1, 3)) == 0
    assert q_stirling(0, Fraction(0), Fraction(1, 3)) == 1
    assert q_series(0, 0, Fraction(1, 2)) == 1.0
    assert q_series(3, 0, Fraction(1, 2)) == 0.0


@pytest.mark.parametrize(
    "n, y", [(0, Fraction(1, 2)), (2, Fraction(3, 10)), (6, Fraction(9, 10))]
)
def test_series_matches_closed_form(n, y):
    p = Fraction(1, 2)
    got, terms = q_series_with_terms(n, y, p, tol=1e-15)
    assert terms >= 1
    assert got == pytest.approx(float(q_stirling(n, y, p)), rel=1e-13)


def test_series_heavy_cancellation():
    # at y = 0.9, n = 6 individual terms reach ~1e7 while Q is O(1);
    # exact accumulation keeps full precision
    v = q_series(6, Fraction(9, 10), Fraction(1, 2))
    assert v == pytest.approx(float(q_stirling(6, Fraction(9, 10), Fraction(1, 2))),
                              rel=1e-13)


@given(
    st.integers(min_value=0, max_value=5),
    st.fractions(min_value=Fraction(1, 20), max_value=Fraction(17, 20)),
    st.fractions(min_value=Fraction(1, 10), max_value=Fraction(9, 10)),
    st.integers(min_value=1, max_value=25),
)
@settings(max_examples=60, deadline=None)
def test_tail_bound_is_sound(n, y, p, cut):
    # the partial sum must sit within the proven tail bound of the limit
    partial = sum(
        rising_factorial(-p * k, n) * (-y) ** k for k in range(cut)
    )
    limit = q_stirling(n, y, p)
    assert abs(partial - limit) <= series_tail_bound(n, y, p, cut)


def test_series_domain():
    with pytest.raises(ValueError):
        q_series(2, 1, Fraction(1, 2))
    with pytest.raises(ValueError):
        q_series(2, Fraction(-1, 10), Fraction(1, 2))
    with pytest.raises(ValueError):
        q_series(2, Fraction(1, 2), Fraction(3, 2))


def test_stirling_domain():
    with pytest.raises(ValueError):
        q_stirling(1, Fraction(-3, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        q_polylog(0, Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize(
    "n, y, p",
    [
        (0, Fraction(1, 4), Fraction(1, 2)),
        (1, Fraction(2, 3), Fraction(1, 3)),
        (2, Fraction(1), Fraction(1, 2)),
        (3, Fraction(9, 10), Fraction(2, 5)),
        (4, Fraction(1, 5), Fraction(1, 2)),
    ],
)
def test_recurrence_identity(n, y, p):
    assert q_recurrence_check(n, y, p)


def test_rational_routes_agree_symbolically():
    for n in range(6):
        for p in (Fraction(1, 2), Fraction(2, 7)):
            assert q_rational(n, p) == q_rational_recurrence(n, p)


@pytest.mark.parametrize("n, k_max", [(1, 20), (2, 30), (4, 60)])
def test_derivative_form(n, k_max):
    assert q_derivative_form_check(n, k_max, Fraction(1, 3), Fraction(1, 2))


@pytest.mark.parametrize(
    "coeffs, y",
    [
        ([1, 2, 3], Fraction(1, 3)),
        ([0, 1], Fraction(-1, 3)),
        ([2, 0, -1, 5], Fraction(1, 2)),
        ([1, -4, 0, 0, 2, -1], Fraction(-2, 5)),
    ],
)
def test_boyadzhiev_transform(coeffs, y):
    assert boyadzhiev_check(Polynomial(coeffs), y)


@given(st.integers(min_value=0, max_value=8))
@settings(max_examples=30)
def test_pochhammer_derivatives(n):
    for k in range(n + 1):
        assert pochhammer_derivative_check(n, k)


def test_hyp_form_n1_offset():
    # printed prefactor makes the n = 1 value y^-3 times the true one
    for y in (Fraction(3, 10), Fraction(1, 2), Fraction(7, 10)):
        ratio = q_hyp(1, y, Fraction(1, 3)) / float(q_stirling(1, y, Fraction(1, 3)))
        assert ratio == pytest.approx(float((1 / y) ** 3), rel=1e-12)


def test_hyp_form_n2_not_a_constant_rescale():
    p = Fraction(1, 2)
    r = [
        q_hyp(2, y, p) / float(q_stirling(2, y, p))
        for y in (Fraction(3, 10), Fraction(1, 2))
    ]
    assert abs(r[0] - r[1]) > 1e-3 * max(abs(x) for x in r)


def test_hyp_form_terminating_and_convergent_paths():
    # p = 1/2, n = 3: upper parameters hit a nonpositive integer -> exact cut
    v1 = q_hyp(3, Fraction(1, 2), Fraction(1, 2))
    assert isinstance(v1, float)
    # p = 2/5, n = 2: no integer m/p -> convergent summation
    v2 = q_hyp(2, Fraction(1, 2), Fraction(2, 5))
    assert isinstance(v2, float)
    with pytest.raises(ValueError):
        q_hyp(0, Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ValueError):
        q_hyp(2, Fraction(3, 2), Fraction(1, 2))
