import pytest

import oracles
from kerovchar.kerov import (
    generalized_kerov,
    kerov_polynomial,
    linear_coefficient,
    prime_divisibility_report,
    quadratic_coefficient,
    quadratic_labelled_count,
)
from kerovchar.perm import multi_cycle
from kerovchar.polynomial import CumulantPolynomial

R = CumulantPolynomial.variable

GOLDEN = {
    1: R(2),
    2: R(3),
    3: R(4) + R(2),
    4: R(5) + 5 * R(3),
    5: R(6) + 15 * R(4) + 5 * R(2) ** 2 + 8 * R(2),
    6: R(7) + 35 * R(5) + 35 * R(3) * R(2) + 84 * R(3),
}


@pytest.mark.parametrize("k", sorted(GOLDEN))
def test_golden_polynomials(k):
    assert kerov_polynomial(k).polynomial == GOLDEN[k]


@pytest.mark.parametrize("k", range(1, 7))
def test_matches_direct_triple_count(k):
    want = CumulantPolynomial.from_factor_counts(oracles.kerov_counts(oracles.long_cycle(k)))
    assert kerov_polynomial(k).polynomial == want


@pytest.mark.parametrize("parts", [[1, 1], [2, 1], [2, 2], [1, 1, 1], [3, 2]])
def test_generalized_matches_direct_triple_count(parts):
    t = tuple(x - 1 for x in multi_cycle(parts).images)
    want = CumulantPolynomial.from_factor_counts(oracles.kerov_counts(t, transitive_only=True))
    assert generalized_kerov(parts).polynomial == want


def test_generalized_examples():
    assert generalized_kerov([1, 1]).polynomial == R(2)
    assert generalized_kerov([5]).polynomial == kerov_polynomial(5).polynomial


@pytest.mark.parametrize("k", range(1, 8))
def test_positivity_degree_and_top_term(k):
    p = kerov_polynomial(k).polynomial
    assert p.coefficient([k + 1]) == 1
    for m, c in p.terms.items():
        assert isinstance(c, int) and c > 0
        deg = sum(i * e for i, e in m)
        assert deg <= k + 1 and (k + 1 - deg) % 2 == 0
        assert all(i >= 2 for i, _ in m)


def test_stats_and_json():
    res = kerov_polynomial(5)
    assert res.stats.visited == 120
    assert res.stats.triples == 15 + 5 + 8 + 1
    assert 0 < res.stats.pruned < 120
    data = res.to_json()
    assert data["cycles"] == [5] and data["stats"]["triples"] == 29
    assert CumulantPolynomial.from_json(data["polynomial"]) == GOLDEN[5]


def test_threads_do_not_change_results():
    a, b = kerov_polynomial(7, threads=1), kerov_polynomial(7, threads=3)
    assert a.polynomial == b.polynomial
    assert a.stats.as_dict() == b.stats.as_dict()


def test_linear_coefficients():
    assert linear_coefficient(5, 2) == 8
    assert linear_coefficient(6, 3) == 84
    for k in range(1, 8):
        assert linear_coefficient(k, k + 1) == 1


def test_quadratic_coefficients():
    assert quadratic_coefficient(5, 2, 2) == 5
    assert quadratic_labelled_count(5, 2, 2) == 10
    assert quadratic_coefficient(6, 2, 3) == 35
    assert quadratic_coefficient(6, 3, 2) == 35
    assert all(quadratic_coefficient(3, a, b) == 0 for a in range(2, 5) for b in range(2, 5))


@pytest.mark.parametrize("k", range(1, 8))
def test_special_terms_match_polynomial(k):
    p = kerov_polynomial(k).polynomial
    for l1 in range(2, k + 2):
        assert linear_coefficient(k, l1) == p.coefficient([l1])
        for l2 in range(2, k + 2):
            assert quadratic_coefficient(k, l1, l2) == p.coefficient([l1, l2])
            assert quadratic_labelled_count(k, l1, l2) == p.derivative_at_zero([l1, l2])


def test_prime_divisibility():
    first, second = prime_divisibility_report(3)
    assert first == R(2) and second == 0
    first, second = prime_divisibility_report(5)
    assert first == 3 * R(4) + R(2) ** 2 + 2 * R(2)
    assert second == R(3)
    with pytest.raises(ValueError):
        prime_divisibility_report(9)


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        kerov_polynomial(0)
    with pytest.raises(ValueError):
        linear_coefficient(3, 1)
