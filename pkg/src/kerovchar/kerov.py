"""Kerov polynomials by counting factorizations that satisfy the marriage condition.

The coefficient of ``R_2^{s_2} R_3^{s_3} ...`` in ``K_{k_1,...,k_l}`` is the
number of triples ``(s1, s2, q)`` where

* ``s1 o s2`` is the product of consecutive cycles of lengths ``k_1..k_l`` and
  ``<s1, s2>`` is transitive,
* ``q`` colors the cycles of ``s2`` by integers ``>= 2`` with
  ``sum(q) = |C(s1)| + |C(s2)|``, color ``i`` used ``s_i`` times,
* every nontrivial set ``A`` of cycles of ``s2`` meets more than
  ``sum_{A} (q - 1)`` cycles of ``s1``.

Colorings are counted, not labelings, so a monomial coefficient comes out
directly (no division by multiplicities).
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinat import compositions, popcount
from .marriage import IntersectionGraph, condition_e, neighbourhood_sizes, prune_disconnecting_edge
from .perm import factorization_tables, long_cycle, multi_cycle
from .polynomial import CumulantPolynomial


@dataclass
class KerovStats:
    visited: int = 0
    pruned: int = 0
    triples: int = 0

    def merge(self, other: "KerovStats") -> None:
        self.visited += other.visited
        self.pruned += other.pruned
        self.triples += other.triples

    def as_dict(self) -> dict:
        return {"factorizations": self.visited, "pruned": self.pruned, "triples": self.triples}


@dataclass
class KerovResult:
    spec: tuple[int, ...]
    polynomial: CumulantPolynomial
    stats: KerovStats = field(default_factory=KerovStats)

    def to_json(self) -> dict:
        return {
            "cycles": list(self.spec),
            "polynomial": self.polynomial.to_json(),
            "stats": self.stats.as_dict(),
        }


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("KEROV_THREADS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=1 << 16)
def _graph_colorings(n_whites: int, masks: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...] | None:
    """Colorings passing the marriage condition, grouped by their factor multiset.

    Returns ``None`` when the graph has a disconnecting edge (never contributes).
    """
    g = IntersectionGraph(n_whites, masks)
    if prune_disconnecting_edge(g):
        return None
    sizes = neighbourhood_sizes(g)
    found: Counter = Counter()
    for q in compositions(n_whites + len(masks), len(masks), minimum=2):
        if condition_e(g, q, sizes):
            found[tuple(sorted(q, reverse=True))] += 1
    return tuple(sorted(found.items()))


def count_triples(
    parts: Sequence[int],
    threads: int | None = None,
    backend: str | None = None,
) -> tuple[Counter, KerovStats]:
    """Factor multiset -> number of contributing triples, plus sweep statistics."""
    target = multi_cycle(parts)
    threads = default_threads() if threads is None else threads
    counts: Counter = Counter()
    stats = KerovStats()
    for table in factorization_tables(target, threads, backend):
        stats.visited += len(table)
        # sum(q) = c1 + c2 with every q >= 2 forces c1 >= c2
        rows = np.nonzero((table.c1 >= table.c2) & table.connected)[0]
        for r in rows:
            c2 = int(table.c2[r])
            key = tuple(sorted(table.masks[r, :c2].tolist()))
            found = _graph_colorings(int(table.c1[r]), key)
            if found is None:
                stats.pruned += 1
                continue
            for factors, c in found:
                counts[factors] += c
                stats.triples += c
    return counts, stats


def generalized_kerov(parts: Sequence[int], threads: int | None = None, backend: str | None = None) -> KerovResult:
    """``K_{k_1,...,k_l}``: equals ``(-1)^{l-1}`` times the cumulant of cycle classes."""
    parts = tuple(int(x) for x in parts)
    counts, stats = count_triples(parts, threads, backend)
    return KerovResult(parts, CumulantPolynomial.from_factor_counts(counts), stats)


def kerov_polynomial(k: int, threads: int | None = None, backend: str | None = None) -> KerovResult:
    """``K_k`` with ``Sigma_k = K_k(R_2, R_3, ...)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return generalized_kerov((k,), threads, backend)


# --------------------------------------------------------------------------
# closed-form special cases
# --------------------------------------------------------------------------

def _cycle_table(k: int):
    return list(factorization_tables(long_cycle(k), threads=1))


def linear_coefficient(k: int, l: int) -> int:
    """Factorizations of the k-cycle with ``s2`` one cycle and ``s1`` l-1 cycles."""
    if k < 1 or l < 2:
        raise ValueError("need k >= 1 and l >= 2")
    return int(sum(np.count_nonzero((t.c2 == 1) & (t.c1 == l - 1)) for t in _cycle_table(k)))


def quadratic_coefficient(k: int, l1: int, l2: int) -> int:
    """Coefficient of ``R_{l1} R_{l2}`` in ``K_k``.

    Counts ``(s1, s2, q)`` with ``s2`` two cycles, ``s1`` having ``l1 + l2 - 2``
    cycles, ``q`` mapping the two cycles of ``s2`` onto ``{l1, l2}`` and each
    cycle ``c`` of ``s2`` meeting at least ``q(c)`` cycles of ``s1``.
    """
    if min(l1, l2) < 2:
        raise ValueError("l1, l2 must be >= 2")
    colorings = {(l1, l2), (l2, l1)}
    total = 0
    for t in _cycle_table(k):
        for r in np.nonzero((t.c2 == 2) & (t.c1 == l1 + l2 - 2))[0]:
            deg = (popcount(int(t.masks[r, 0])), popcount(int(t.masks[r, 1])))
            total += sum(1 for a, b in colorings if deg[0] >= a and deg[1] >= b)
    return total


def quadratic_labelled_count(k: int, l1: int, l2: int) -> int:
    """The same count with bijective labelings of the two cycles instead of
    colorings: equals the second derivative ``d^2 K_k / dR_{l1} dR_{l2}`` at 0."""
    return quadratic_coefficient(k, l1, l2) * (2 if l1 == l2 else 1)


def prime_divisibility_report(p: int, threads: int | None = None) -> tuple[CumulantPolynomial, CumulantPolynomial]:
    """``((K_p - R_{p+1} + 2 R_2) / p, (K_{p-1} - R_p) / p)``.

    Raises ``ArithmeticError`` if either has a non-integral or negative
    coefficient, which would mean the enumeration is wrong.
    """
    if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not an odd prime")
    R = CumulantPolynomial.variable
    first = (kerov_polynomial(p, threads).polynomial - R(p + 1) + 2 * R(2)) / p
    second = (kerov_polynomial(p - 1, threads).polynomial - R(p)) / p
    for name, poly in (("first", first), ("second", second)):
        if not poly.is_integral() or not poly.is_nonnegative():
            raise ArithmeticError(f"{name} quotient for p={p} is not a nonnegative integer polynomial: {poly}")
    return first, second
