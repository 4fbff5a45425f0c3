"""Intersection graphs of factorizations and the marriage condition.

White vertices are the cycles of ``s1`` (boys), black vertices the cycles of
``s2`` (girls); a white and a black are adjacent when the cycles share a
point. A coloring ``q`` gives every black ``j`` the demand ``q[j] - 1``.

Vertex sets are bitmasks throughout: bit ``i`` of ``black_masks[j]`` is set
when white ``i`` meets black ``j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .combinat import popcount
from .perm import DegreeMismatch, Permutation


@dataclass(frozen=True)
class IntersectionGraph:
    n_whites: int
    black_masks: tuple[int, ...]
    whites: tuple[tuple[int, ...], ...] = ()
    blacks: tuple[tuple[int, ...], ...] = ()

    @property
    def n_blacks(self) -> int:
        return len(self.black_masks)

    def white_neighbours(self, i: int) -> int:
        """Bitmask of blacks adjacent to white ``i``."""
        out = 0
        for j, m in enumerate(self.black_masks):
            if m >> i & 1:
                out |= 1 << j
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for j, m in enumerate(self.black_masks) for i in range(self.n_whites) if m >> i & 1]

    def neighbourhood(self, subset: int) -> int:
        out = 0
        for j, m in enumerate(self.black_masks):
            if subset >> j & 1:
                out |= m
        return out

    def is_connected(self) -> bool:
        if self.n_whites == 0:
            return self.n_blacks <= 1
        reach = self.black_masks[0] if self.black_masks else 1
        changed = True
        while changed:
            changed = False
            for m in self.black_masks:
                if m & reach and (m | reach) != reach:
                    reach |= m
                    changed = True
        return reach == (1 << self.n_whites) - 1


def build_graph(s1: Permutation, s2: Permutation) -> IntersectionGraph:
    if s1.n != s2.n:
        raise DegreeMismatch(f"degrees {s1.n} and {s2.n} differ")
    white_of = {}
    for i, c in enumerate(s1.cycles):
        for x in c:
            white_of[x] = i
    masks = []
    for c in s2.cycles:
        m = 0
        for x in c:
            m |= 1 << white_of[x]
        masks.append(m)
    return IntersectionGraph(len(s1.cycles), tuple(masks), s1.cycles, s2.cycles)


def neighbourhood_sizes(g: IntersectionGraph) -> list[int]:
    """``sizes[A] = |N(A)|`` for every bitmask ``A`` of blacks."""
    k = g.n_blacks
    unions = [0] * (1 << k)
    sizes = [0] * (1 << k)
    for a in range(1, 1 << k):
        low = a & -a
        unions[a] = unions[a ^ low] | g.black_masks[low.bit_length() - 1]
        sizes[a] = popcount(unions[a])
    return sizes


def condition_e(g: IntersectionGraph, q: Sequence[int], sizes: Sequence[int] | None = None) -> bool:
    """Every nontrivial set A of blacks meets more than sum_{A}(q - 1) whites."""
    k = g.n_blacks
    if sizes is None:
        sizes = neighbourhood_sizes(g)
    full = (1 << k) - 1
    for a in range(1, full):
        need = 0
        for j in range(k):
            if a >> j & 1:
                need += q[j] - 1
        if sizes[a] <= need:
            return False
    return True


# --------------------------------------------------------------------------
# marriage arrangements (integer b-matchings)
# --------------------------------------------------------------------------

def _arrangement(
    g: IntersectionGraph,
    demand: Sequence[int],
    whites: Iterable[int] | None = None,
    forbidden: frozenset[tuple[int, int]] = frozenset(),
) -> dict[int, int] | None:
    """Assign every listed white to one adjacent black so that black ``j``
    receives exactly ``demand[j]`` whites. Augmenting paths over demand slots."""
    whites = list(range(g.n_whites)) if whites is None else list(whites)
    if sum(demand) != len(whites) or any(d < 0 for d in demand):
        return None
    slots = [(j, s) for j, d in enumerate(demand) for s in range(d)]
    adj = {
        i: [t for t, (j, _) in enumerate(slots) if g.black_masks[j] >> i & 1 and (i, j) not in forbidden]
        for i in whites
    }
    owner = [-1] * len(slots)

    def augment(i, seen):
        for t in adj[i]:
            if t in seen:
                continue
            seen.add(t)
            if owner[t] < 0 or augment(owner[t], seen):
                owner[t] = i
                return True
        return False

    for i in whites:
        if not augment(i, set()):
            return None
    return {owner[t]: slots[t][0] for t in range(len(slots))}


def marriage_arrangement(g: IntersectionGraph, q: Sequence[int]) -> dict[int, int] | None:
    """Some arrangement white -> black with exactly ``q[j] - 1`` husbands per black."""
    return _arrangement(g, [x - 1 for x in q])


def condition_e2(g: IntersectionGraph, q: Sequence[int]) -> bool:
    """For every nontrivial A two arrangements with different husbands of A exist."""
    demand = [x - 1 for x in q]
    first = _arrangement(g, demand)
    if first is None:
        return False
    k = g.n_blacks
    for a in range(1, (1 << k) - 1):
        husbands = [i for i, j in first.items() if a >> j & 1]
        wives = [j for j in range(k) if a >> j & 1]
        # sets of equal size differ iff some husband of A in `first` leaves A
        if not any(
            _arrangement(g, demand, forbidden=frozenset((i, j) for j in wives)) is not None
            for i in husbands
        ):
            return False
    return True


def q_admissible(g: IntersectionGraph, q: Sequence[int]) -> bool:
    """Strictly positive solution of the transportation system exists.

    The average of all 0/1 solutions is strictly positive exactly when every
    edge lies in some 0/1 solution, which is what is checked.
    """
    demand = [x - 1 for x in q]
    if _arrangement(g, demand) is None:
        return False
    for i, j in g.edges():
        reduced = list(demand)
        reduced[j] -= 1
        rest = [w for w in range(g.n_whites) if w != i]
        if _arrangement(g, reduced, rest) is None:
            return False
    return True


def prune_disconnecting_edge(g: IntersectionGraph) -> bool:
    """Is there a bridge whose removal leaves a black on both sides?"""
    edges = g.edges()
    for wi, bj in edges:
        seen_w, seen_b = {wi}, set()
        frontier = [("w", wi)]
        while frontier:
            kind, v = frontier.pop()
            if kind == "w":
                for j, m in enumerate(g.black_masks):
                    if m >> v & 1 and (v, j) != (wi, bj) and j not in seen_b:
                        seen_b.add(j)
                        frontier.append(("b", j))
            else:
                m = g.black_masks[v]
                for i in range(g.n_whites):
                    if m >> i & 1 and (i, v) != (wi, bj) and i not in seen_w:
                        seen_w.add(i)
                        frontier.append(("w", i))
        if bj in seen_b:
            continue  # not a bridge
        if seen_b:
            return True
    return False


# --------------------------------------------------------------------------
# chains, Euler characteristic and the inclusion-exclusion families
# --------------------------------------------------------------------------

def _as_masks(family: Iterable) -> list[int]:
    masks = []
    for s in family:
        if isinstance(s, int):
            masks.append(s)
        else:
            m = 0
            for x in s:
                m |= 1 << int(x)
            masks.append(m)
    if len(set(masks)) != len(masks):
        raise ValueError("family members must be distinct")
    return masks


def euler_characteristic(family: Iterable) -> int:
    """Sum over nonempty strict chains ``C_1 < ... < C_l`` of ``(-1)^(l-1)``.

    Members are bitmasks or iterables of small non-negative integers.
    """
    masks = sorted(_as_masks(family), key=popcount)
    top_weight: dict[int, int] = {}
    for s in masks:
        below = sum(w for t, w in top_weight.items() if t != s and t & s == t)
        top_weight[s] = 1 - below
    return sum(top_weight.values())


def chain_sum(family: Iterable) -> int:
    """Sum over all strict chains including the empty one of ``(-1)^l``."""
    return 1 - euler_characteristic(family)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty classes."""
    row = [1] + [0] * k
    for m in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(m, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return row[k]


def stirling_alternating_sum(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum((-1) ** k * stirling2(n, k) * math.factorial(k) for k in range(1, n + 1))


def bad_family_factorization(g: IntersectionGraph, q: Sequence[int]) -> list[int]:
    """Nontrivial black sets meeting at most sum_{A}(q - 1) whites."""
    sizes = neighbourhood_sizes(g)
    full = (1 << g.n_blacks) - 1
    out = []
    for a in range(1, full):
        need = sum(q[j] - 1 for j in range(g.n_blacks) if a >> j & 1)
        if sizes[a] <= need:
            out.append(a)
    return out


def bad_family_numbers(ks: Sequence[int], ns: Sequence[int]) -> list[int]:
    r = len(ks)
    return [
        a for a in range(1, (1 << r) - 1)
        if sum(ks[i] for i in range(r) if a >> i & 1) <= sum(ns[i] for i in range(r) if a >> i & 1)
    ]


def bad_family_partition(blocks: Sequence[Sequence[int]], phi: Sequence[int], ns: Sequence[int]) -> list[int]:
    r = len(ns)
    out = []
    for a in range(1, (1 << r) - 1):
        lhs = 0
        for b, value in zip(blocks, phi):
            if any(a >> i & 1 for i in b):
                lhs += value - sum(1 for i in b if not a >> i & 1)
        if lhs <= sum(ns[i] for i in range(r) if a >> i & 1):
            out.append(a)
    return out
