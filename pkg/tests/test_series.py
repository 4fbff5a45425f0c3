from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from kerovchar import series
from kerovchar.polynomial import CumulantPolynomial
from kerovchar.series import (
    InsufficientOrder,
    TruncatedSeries,
    c_from_r,
    convert,
    falling_factorial,
    goulden_rattan_L,
    lagrange_free_cumulant,
    moments_from_free_cumulants,
    r_from_s,
    r_polynomials_in_s,
    s_from_r,
    s_polynomials_in_r,
)

R = CumulantPolynomial.variable
C = lambda i: CumulantPolynomial.variable(i, "C")  # noqa: E731


def fr(*xs):
    return tuple(Fraction(x) for x in xs)


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 0) == 1
    assert falling_factorial(-1, 2) == 2


def test_semicircle_moments_are_catalan():
    m = moments_from_free_cumulants(TruncatedSeries("free-cumulants", fr(0, 1, 0, 0, 0, 0, 0, 0)))
    assert m.coeffs == fr(0, 1, 0, 2, 0, 5, 0, 14)


def test_catalan_moments_give_semicircle_cumulants():
    m = TruncatedSeries("moments", fr(0, 1, 0, 2, 0, 5))
    assert convert(m, "free-cumulants").coeffs == fr(0, 1, 0, 0, 0, 0)
    assert lagrange_free_cumulant(m).coeffs == fr(0, 1, 0, 0, 0, 0)


def test_dirac_mass():
    a = Fraction(3, 2)
    m = TruncatedSeries("moments", tuple(a ** n for n in range(1, 7)))
    assert convert(m, "free-cumulants").coeffs == (a, 0, 0, 0, 0, 0)
    assert convert(m, "s-functionals").coeffs == tuple(a ** n / n for n in range(1, 7))


def test_symbolic_low_orders():
    s = s_polynomials_in_r(4, centered=False)
    assert s[1] == R(2) + Fraction(1, 2) * R(1) ** 2
    r = r_polynomials_in_s(4)
    S = lambda i: CumulantPolynomial.variable(i, "S")  # noqa: E731
    assert r[3] == S(4) - Fraction(3, 2) * S(2) ** 2


def test_role_checks():
    m = TruncatedSeries("moments", fr(1, 2))
    with pytest.raises(ValueError):
        s_from_r(m)
    with pytest.raises(ValueError):
        TruncatedSeries("cumulants", fr(1))


def test_lagrange_order_guard():
    with pytest.raises(InsufficientOrder):
        lagrange_free_cumulant(TruncatedSeries("moments", fr(1, 2)), order=3)


def test_json_roundtrip_and_fraction_strings():
    s = TruncatedSeries("moments", fr(Fraction(1, 3), -2))
    assert TruncatedSeries.from_json(s.to_json()) == s
    assert TruncatedSeries.from_json({"role": "moments", "coefficients": ["1/3", "-2"]}) == s


def test_goulden_rattan_basis():
    cs = c_from_r(4)
    assert cs[0] == R(2)
    assert cs[2] == 3 * R(4) + R(2) ** 2
    k3 = R(4) + R(2)
    k4 = R(5) + 5 * R(3)
    k5 = R(6) + 15 * R(4) + 5 * R(2) ** 2 + 8 * R(2)
    assert goulden_rattan_L(3, k3) == C(2)
    assert goulden_rattan_L(4, k4) == Fraction(5, 2) * C(3)
    assert goulden_rattan_L(5, k5) == 5 * C(4) + 8 * C(2)


fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(st.lists(fracs, min_size=1, max_size=8))
def test_moment_cumulant_agrees_with_noncrossing_sum(rs):
    m = moments_from_free_cumulants(TruncatedSeries("free-cumulants", tuple(rs)))
    for n in range(1, len(rs) + 1):
        assert m[n] == oracles.nc_moment(rs, n)


@given(st.lists(fracs, min_size=1, max_size=10), st.sampled_from(series.ROLES), st.sampled_from(series.ROLES))
def test_roundtrips(xs, role, via):
    s = TruncatedSeries(role, tuple(xs))
    assert convert(convert(s, via), role) == s


@given(st.lists(fracs, min_size=1, max_size=8))
def test_lagrange_matches_series_route(xs):
    m = TruncatedSeries("moments", tuple(xs))
    assert lagrange_free_cumulant(m) == convert(m, "free-cumulants")


@given(st.lists(fracs, min_size=2, max_size=8))
def test_numeric_and_symbolic_s_agree(xs):
    xs[0] = Fraction(0)
    r = TruncatedSeries("free-cumulants", tuple(xs))
    polys = s_polynomials_in_r(len(xs))
    numeric = s_from_r(r)
    for n, p in enumerate(polys, start=1):
        assert p.evaluate({i: xs[i - 1] for i in range(1, len(xs) + 1)}) == numeric[n]
    assert r_from_s(numeric) == r
