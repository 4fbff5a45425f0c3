"""Permutations of {1..n}, cycle decompositions and factorization sweeps.

Composition convention, fixed everywhere in the package::

    compose(a, b)(x) == a(b(x))

so a factorization ``s1 o s2 = target`` means ``target(x) == s1(s2(x))``.
Fixed points are cycles of length one.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from ._kernels import FactorizationTable, factorization_table


class DegreeMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored by its image sequence."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a bijection of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __repr__(self) -> str:
        cyc = "".join("(" + ",".join(map(str, c)) + ")" for c in self.cycles if len(c) > 1)
        return f"Permutation<{self.n}>{cyc or '()'}"

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for c in cycles:
            for i, x in enumerate(c):
                images[x - 1] = c[(i + 1) % len(c)]
        return cls(tuple(images))

    @classmethod
    def from_zero_based(cls, images0) -> "Permutation":
        return cls(tuple(int(x) + 1 for x in images0))

    def zero_based(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64) - 1

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, y in enumerate(self.images, start=1):
            inv[y - 1] = i
        return Permutation(tuple(inv))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Cycles listed from their minimal element, sorted by that element."""
        seen = [False] * (self.n + 1)
        out = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return tuple(out)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    @property
    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    @property
    def sign(self) -> int:
        return -1 if (self.n - self.num_cycles) % 2 else 1

    @property
    def transposition_length(self) -> int:
        """Minimal number of transpositions whose product is this permutation."""
        return sum(len(c) - 1 for c in self.cycles)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``(a o b)(x) = a(b(x))``."""
    if a.n != b.n:
        raise DegreeMismatch(f"cannot compose degrees {a.n} and {b.n}")
    return Permutation(tuple(a.images[y - 1] for y in b.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycles(p: Permutation) -> tuple[tuple[int, ...], ...]:
    return p.cycles


def long_cycle(k: int) -> Permutation:
    if k < 1:
        raise ValueError("k must be >= 1")
    return Permutation(tuple(list(range(2, k + 1)) + [1]))


def multi_cycle(parts: Sequence[int]) -> Permutation:
    """Consecutive disjoint cycles (1..k1)(k1+1..k1+k2)..."""
    parts = [int(x) for x in parts]
    if not parts or min(parts) < 1:
        raise ValueError("parts must be a nonempty sequence of positive integers")
    images = []
    offset = 0
    for k in parts:
        images.extend(offset + ((i + 1) % k) + 1 for i in range(k))
        offset += k
    return Permutation(tuple(images))


def is_transitive(gens: Sequence[Permutation], n: int) -> bool:
    """Whether the group generated by ``gens`` has a single orbit on {1..n}."""
    for g in gens:
        if g.n != n:
            raise DegreeMismatch(f"generator of degree {g.n}, expected {n}")
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(1, n + 1):
            ra, rb = find(x), find(g(x))
            if ra != rb:
                parent[ra] = rb
    root = find(1)
    return all(find(x) == root for x in range(1, n + 1))


# --------------------------------------------------------------------------
# factorization sweeps
# --------------------------------------------------------------------------

def shards(n: int) -> list[int]:
    """Shard ids for a degree-``n`` sweep: the (0-based) image of 1 under s2."""
    return list(range(n))


def factorization_tables(
    target: Permutation,
    threads: int = 1,
    backend: str | None = None,
) -> Iterator[FactorizationTable]:
    """Yield the sweep tables shard by shard, in shard order.

    Shard ``j`` holds every ``s2`` with ``s2(1) = j + 1``; concatenating shards
    in order reproduces the lexicographic sweep. ``threads`` only changes how
    the shards are computed, never their content or order.
    """
    t0 = target.zero_based()
    if target.n <= 3 or threads <= 1:
        for first in shards(target.n):
            yield factorization_table(t0, first, backend)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(lambda f: factorization_table(t0, f, backend), shards(target.n))


def iter_factorizations(
    target: Permutation,
    shard: int | None = None,
    backend: str | None = None,
) -> Iterator[tuple[Permutation, Permutation]]:
    """All pairs ``(s1, s2)`` with ``s1 o s2 = target``, s2 in lexicographic order."""
    firsts = shards(target.n) if shard is None else [shard]
    t = target.zero_based()
    for first in firsts:
        table = factorization_table(t, first, backend)
        for row in table.sigma2:
            s2 = Permutation.from_zero_based(row)
            yield compose(target, s2.inverse()), s2


def enumerate_factorizations(
    target: Permutation,
    visit: Callable[[Permutation, Permutation], None],
    shard: int | None = None,
    backend: str | None = None,
) -> None:
    for s1, s2 in iter_factorizations(target, shard, backend):
        visit(s1, s2)
