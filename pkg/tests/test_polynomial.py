from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from kerovchar.polynomial import CumulantPolynomial, monomial_from_factors, weighted_degree

R = CumulantPolynomial.variable


def k6():
    return R(7) + 35 * R(5) + 35 * R(3) * R(2) + 84 * R(3)


def test_text_and_latex_rendering():
    assert k6().to_text() == "R7 + 35 R5 + 35 R3 R2 + 84 R3"
    assert k6().to_latex() == "R_7 + 35R_5 + 35R_3R_2 + 84R_3"
    assert (R(6) + 15 * R(4) + 5 * R(2) ** 2 + 8 * R(2)).to_text() == "R6 + 15 R4 + 5 R2^2 + 8 R2"


def test_rational_rendering():
    p = Fraction(5, 2) * CumulantPolynomial.variable(3, "C")
    assert p.to_text() == "5/2 C3"
    assert "\\frac{5}{2}" in p.to_latex()


def test_coefficient_lookup_forms():
    p = k6()
    assert p.coefficient([3, 2]) == 35
    assert p.coefficient({3: 1, 2: 1}) == 35
    assert p.coefficient(monomial_from_factors([2, 3])) == 35
    assert p.coefficient([4]) == 0


def test_weighted_degree_and_homogeneity():
    assert weighted_degree(monomial_from_factors([3, 2, 2])) == 7
    assert (R(4) * R(2)).is_homogeneous(6)
    assert not k6().is_homogeneous()
    assert k6().degree() == 7


def test_derivative_counts_multiplicity():
    p = 5 * R(2) ** 2
    assert p.derivative_at_zero([2, 2]) == 10
    assert p.derivative_at_zero([2]) == 0


def test_json_roundtrip_and_big_integers():
    big = 10 ** 30 * R(9) + Fraction(1, 3) * R(2)
    data = big.to_json()
    assert all(isinstance(t["num"], str) for t in data["terms"])
    assert CumulantPolynomial.from_json(data) == big


def test_substitute_and_evaluate():
    p = R(2) * R(3) + 1
    q = p.substitute({2: R(4), 3: R(2) + 1})
    assert q == R(4) * R(2) + R(4) + 1
    assert p.evaluate({2: 2, 3: 5}) == 11
    assert p.evaluate([0, 2, 5]) == 11


small = st.dictionaries(
    st.lists(st.integers(2, 5), min_size=0, max_size=3).map(lambda xs: monomial_from_factors(xs)),
    st.integers(-5, 5),
    max_size=4,
).map(CumulantPolynomial)


@given(small, small, small)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(small, st.dictionaries(st.integers(2, 5), st.integers(-3, 3), min_size=4, max_size=4))
def test_evaluation_is_a_ring_map(a, values):
    values = {i: values.get(i, 0) for i in range(2, 6)}
    b = a * a + 3 * a
    assert b.evaluate(values) == a.evaluate(values) ** 2 + 3 * a.evaluate(values)


@given(small)
def test_json_roundtrip_property(a):
    assert CumulantPolynomial.from_json(a.to_json()) == a
