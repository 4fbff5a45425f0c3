import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from kerovchar.perm import (
    DegreeMismatch,
    Permutation,
    compose,
    factorization_tables,
    is_transitive,
    iter_factorizations,
    long_cycle,
    multi_cycle,
)


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))
    )


def same_degree_pairs(max_n=7, count=2):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))] * count)
    )


def test_long_cycle_shape():
    c = long_cycle(5)
    assert c.cycles == ((1, 2, 3, 4, 5),)
    assert c(5) == 1


def test_multi_cycle_is_consecutive():
    p = multi_cycle([2, 1, 3])
    assert p.cycles == ((1, 2), (3,), (4, 5, 6))
    assert p.cycle_type == (3, 2, 1)


def test_compose_convention():
    a = Permutation.from_cycles(3, [(1, 2)])
    b = Permutation.from_cycles(3, [(2, 3)])
    # (a o b)(2) = a(b(2)) = a(3) = 3
    assert compose(a, b)(2) == 3


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(long_cycle(3), long_cycle(4))


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_identity_and_sign():
    e = Permutation.identity(4)
    assert e.num_cycles == 4 and e.sign == 1
    assert long_cycle(4).sign == -1
    assert long_cycle(4).transposition_length == 3


def test_transitivity():
    assert is_transitive([long_cycle(4)], 4)
    assert not is_transitive([multi_cycle([2, 2])], 4)
    swap = Permutation.from_cycles(4, [(2, 3)])
    assert is_transitive([multi_cycle([2, 2]), swap], 4)


@given(same_degree_pairs(count=3))
def test_compose_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms())
def test_inverse(p):
    assert compose(p, p.inverse()) == Permutation.identity(p.n)
    assert p.inverse().inverse() == p


@given(same_degree_pairs())
def test_sign_is_multiplicative(pair):
    a, b = pair
    assert compose(a, b).sign == a.sign * b.sign


@given(perms())
def test_cycles_partition_the_points(p):
    pts = sorted(x for c in p.cycles for x in c)
    assert pts == list(range(1, p.n + 1))
    assert sum(p.cycle_type) == p.n
    assert all(c[0] == min(c) for c in p.cycles)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_factorizations_match_brute_force(k):
    target = long_cycle(k)
    got = {(s1.zero_based().tolist().__repr__(), s2.zero_based().tolist().__repr__()) for s1, s2 in iter_factorizations(target)}
    want = {(repr(list(s1)), repr(list(s2))) for s1, s2 in oracles.factorizations(oracles.long_cycle(k))}
    assert got == want
    assert len(got) == len(list(itertools.permutations(range(k))))


@pytest.mark.parametrize("parts", [[3], [2, 2], [3, 1, 1]])
def test_tables_record_cycle_counts_and_transitivity(parts):
    target = multi_cycle(parts)
    t0 = tuple(x - 1 for x in target.images)
    rows = []
    for t in factorization_tables(target):
        for r in range(len(t)):
            rows.append((tuple(int(x) for x in t.sigma2[r]), int(t.c1[r]), int(t.c2[r]), bool(t.connected[r])))
    for s2, c1, c2, conn in rows:
        s1 = oracles.compose(t0, oracles.inverse(s2))
        assert c1 == len(oracles.cycle_sets(s1))
        assert c2 == len(oracles.cycle_sets(s2))
        assert conn == oracles.transitive(s1, s2)
