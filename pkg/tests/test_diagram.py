from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from kerovchar.combinat import partitions
from kerovchar.diagram import (
    MultiRectangular,
    dilate,
    free_cumulants,
    frobenius_character,
    s_functionals,
    transition_moments,
)
from kerovchar.oracle import normalized_character


def test_partition_encoding():
    d = MultiRectangular.from_partition([4, 4, 3, 1])
    assert d.p == (2, 1, 1) and d.q == (4, 3, 1)
    assert d.to_partition() == (4, 4, 3, 1)
    assert d.area == 12


def test_validation():
    with pytest.raises(ValueError):
        MultiRectangular((1, 2), (1, 3))
    with pytest.raises(ValueError):
        MultiRectangular((1,), (0,))
    assert MultiRectangular.normalized((1, 0, 2), (3, 2, 3)) == MultiRectangular((3,), (3,))


def test_json_forms():
    d = MultiRectangular((Fraction(1, 2),), (3,))
    assert MultiRectangular.from_json(d.to_json()) == d
    assert MultiRectangular.from_json([2, 1]) == MultiRectangular.from_partition([2, 1])
    assert MultiRectangular.from_json({"partition": [2, 1]}) == MultiRectangular((1, 1), (2, 1))


def test_rectangle_free_cumulant():
    # R_2 of a p x q rectangle is its area
    r = free_cumulants(MultiRectangular((2,), (3,)), 4)
    assert r[1] == 0 and r[2] == 6


def test_s1_vanishes_and_s2_is_area():
    s = s_functionals([3, 1], 3)
    assert s[1] == 0 and s[2] == 4


@pytest.mark.parametrize("n", range(1, 8))
def test_transition_moments_match_interlacing_measure(n):
    for lam in partitions(n):
        want = oracles.measure_moments(oracles.transition_measure(lam), 6)
        assert list(transition_moments(lam, 6).coeffs) == want


@pytest.mark.parametrize("n", range(1, 7))
def test_frobenius_matches_characters(n):
    for lam in partitions(n):
        for k in range(1, 6):
            assert frobenius_character(lam, k) == normalized_character(lam, [k])


bands = st.integers(1, 3).flatmap(
    lambda m: st.tuples(
        st.lists(st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=4), min_size=m, max_size=m),
        st.lists(st.fractions(min_value=Fraction(1, 4), max_value=5, max_denominator=4), min_size=m, max_size=m, unique=True),
    )
)


@given(bands, st.sampled_from([Fraction(2), Fraction(3, 2), Fraction(1, 3)]))
def test_dilation_homogeneity(pq, s):
    p, q = pq
    d = MultiRectangular(tuple(p), tuple(sorted(q, reverse=True)))
    base, scaled = free_cumulants(d, 6), free_cumulants(dilate(d, s), 6)
    for k in range(1, 7):
        assert scaled[k] == s ** k * base[k]


@given(bands)
def test_area_is_second_free_cumulant(pq):
    p, q = pq
    d = MultiRectangular(tuple(p), tuple(sorted(q, reverse=True)))
    assert free_cumulants(d, 2)[2] == d.area
