import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from kerovchar.combinat import compositions
from kerovchar.marriage import (
    IntersectionGraph,
    bad_family_numbers,
    bad_family_partition,
    build_graph,
    chain_sum,
    condition_e,
    condition_e2,
    euler_characteristic,
    marriage_arrangement,
    prune_disconnecting_edge,
    q_admissible,
    stirling2,
    stirling_alternating_sum,
)
from kerovchar.perm import Permutation, long_cycle
from kerovchar.verification import random_closure_family

SQUARE = IntersectionGraph(2, (0b11, 0b11))


def test_build_graph_stars():
    g = build_graph(Permutation.identity(4), long_cycle(4))
    assert (g.n_whites, g.black_masks) == (4, (0b1111,))
    g = build_graph(long_cycle(4), Permutation.identity(4))
    assert (g.n_whites, g.black_masks) == (1, (1, 1, 1, 1))


def test_build_graph_single_edge():
    s1 = Permutation.from_cycles(3, [(1, 3, 2)])
    g = build_graph(s1, long_cycle(3))
    assert g.edges() == [(0, 0)]
    assert g.whites == ((1, 3, 2),) and g.blacks == ((1, 2, 3),)


def test_condition_e_examples():
    assert condition_e(IntersectionGraph(3, (0b111,)), (4,))
    assert condition_e(SQUARE, (2, 2))
    assert not condition_e(IntersectionGraph(2, (0b01, 0b10)), (2, 2))


def test_double_marriage_examples():
    assert condition_e2(SQUARE, (2, 2))
    first = marriage_arrangement(SQUARE, (2, 2))
    assert sorted(first.values()) == [0, 1]
    # the swapped arrangement is the second one
    assert {0: 1 - first[0], 1: 1 - first[1]} != first
    assert not condition_e2(SQUARE, (2, 3))
    assert not condition_e2(IntersectionGraph(2, (0b01, 0b10)), (2, 2))


def test_q_admissible_examples():
    assert q_admissible(IntersectionGraph(1, (1,)), (2,))
    two_parts = IntersectionGraph(2, (0b01, 0b10))
    assert q_admissible(two_parts, (2, 2))
    # each component on its own satisfies the marriage condition
    assert condition_e(IntersectionGraph(1, (1,)), (2,))


def test_pruning_examples():
    assert prune_disconnecting_edge(IntersectionGraph(1, (1, 1)))
    assert not prune_disconnecting_edge(IntersectionGraph(3, (0b111,)))
    assert not prune_disconnecting_edge(SQUARE)


def test_euler_characteristic_examples():
    assert euler_characteristic([{1}]) == 1
    assert euler_characteristic([{1}, {1, 2}]) == 1
    assert euler_characteristic([{1}, {2}]) == 2
    assert chain_sum([]) == 1


def test_stirling():
    assert [stirling_alternating_sum(n) for n in (1, 2, 3)] == [-1, 1, -1]
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert stirling2(n, k) == oracles.stirling_second(n, k)
    with pytest.raises(ValueError):
        stirling_alternating_sum(0)


@st.composite
def connected_graphs(draw):
    whites = draw(st.integers(1, 6))
    blacks = draw(st.integers(1, min(whites, 4)))
    masks = tuple(draw(st.integers(1, (1 << whites) - 1)) for _ in range(blacks))
    g = IntersectionGraph(whites, masks)
    assume(g.is_connected())
    q = draw(st.sampled_from(list(compositions(whites + blacks, blacks, minimum=2))))
    return g, q


@given(connected_graphs())
def test_marriage_conditions_agree(gq):
    g, q = gq
    assert condition_e(g, q) == condition_e2(g, q) == q_admissible(g, q)


@given(connected_graphs())
def test_pruned_graphs_never_pass(gq):
    g, q = gq
    if prune_disconnecting_edge(g):
        assert not condition_e(g, q)


@given(connected_graphs())
def test_condition_e_against_set_oracle(gq):
    g, q = gq
    whites = [frozenset(j for j, m in enumerate(g.black_masks) if m >> i & 1) for i in range(g.n_whites)]
    # express adjacency as "white meets black" through shared labels
    blacks = [frozenset([j]) for j in range(g.n_blacks)]
    assert condition_e(g, q) == oracles.marriage_ok(whites, blacks, q)


families = st.lists(st.frozensets(st.integers(0, 4), max_size=5), min_size=1, max_size=7, unique=True)


@given(families)
def test_euler_characteristic_against_chain_enumeration(family):
    assert euler_characteristic(family) == oracles.euler_characteristic(family)


@given(st.integers(0, 10 ** 6), st.integers(1, 6))
def test_closure_families_have_unit_euler_characteristic(seed, ground):
    import random

    fam = random_closure_family(random.Random(seed), ground)
    assert euler_characteristic(fam) == 1


@given(st.lists(st.integers(1, 6), min_size=1, max_size=5), st.data())
def test_number_family_chain_sum(ns, data):
    ks = data.draw(st.lists(st.integers(1, 6), min_size=len(ns), max_size=len(ns)))
    ks[-1] += sum(ns) - sum(ks)
    want = (-1) ** (len(ns) - 1) if ks == ns else 0
    assert chain_sum(bad_family_numbers(ks, ns)) == want


@given(st.lists(st.integers(2, 6), min_size=1, max_size=5), st.data())
def test_partition_family_chain_sum(ns, data):
    r = len(ns)
    blocks = data.draw(st.sampled_from(list(oracles.set_partitions(range(r)))))
    spare = sum(ns) - sum(len(b) for b in blocks)
    cuts = sorted(data.draw(st.lists(st.integers(0, spare), min_size=len(blocks) - 1, max_size=len(blocks) - 1)))
    extra = [b - a for a, b in zip([0] + cuts, cuts + [spare])]
    phi = [len(b) + e for b, e in zip(blocks, extra)]
    exact = all(phi[j] == sum(ns[i] for i in b) for j, b in enumerate(blocks))
    want = (-1) ** (len(blocks) - 1) if exact else 0
    assert chain_sum(bad_family_partition(blocks, phi, ns)) == want


def test_partition_family_identity_needs_values_at_least_two():
    # with a value 1 the identity breaks: the family is {{1}} and the sum is 0, not 1
    fam = bad_family_partition([[0, 1]], [4], [1, 3])
    assert fam == [0b10]
    assert chain_sum(fam) == 0


@pytest.mark.parametrize("k", range(1, 7))
def test_factorization_family_chain_sum(k):
    target = oracles.long_cycle(k)
    for s1, s2 in oracles.factorizations(target):
        g = build_graph(Permutation(tuple(x + 1 for x in s1)), Permutation(tuple(x + 1 for x in s2)))
        c1, c2 = g.n_whites, g.n_blacks
        for q in compositions(c1 + c2, c2, minimum=2):
            from kerovchar.marriage import bad_family_factorization

            fam = bad_family_factorization(g, q)
            assert chain_sum(fam) == (1 if not fam else 0)
            assert (not fam) == condition_e(g, q)
