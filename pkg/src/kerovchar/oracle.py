"""Ground-truth characters of symmetric groups for honest integer partitions.

Nothing here touches free cumulants or factorizations: irreducible
characters come from the Murnaghan-Nakayama rule on beta-sets, and everything
else is arithmetic on those values.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinat import set_partitions
from .series import falling_factorial


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    length = len(lam)
    return tuple(part + length - 1 - i for i, part in enumerate(lam))


def _from_beta(beta: Sequence[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    return tuple(b - (length - 1 - i) for i, b in enumerate(beta) if b - (length - 1 - i) > 0)


def _rim_hooks(lam: tuple[int, ...], r: int):
    """Yield ``(remaining partition, sign)`` for every removable r-rim hook."""
    beta = _beta_set(lam)
    occupied = set(beta)
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        between = sum(1 for c in beta if target < c < b)
        yield _from_beta([target if c == b else c for c in beta]), (-1) ** between


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    head, tail = mu[0], mu[1:]
    return sum(sign * _mn(rest, tail) for rest, sign in _rim_hooks(lam, head))


def _clean(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam if int(x) != 0)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character ``chi^lambda`` on the class of cycle type ``mu``."""
    lam = _clean(lam)
    mu = tuple(sorted((int(x) for x in mu if int(x) != 0), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"|lambda| = {sum(lam)} but |mu| = {sum(mu)}")
    return _mn(lam, mu)


def dimension(lam: Sequence[int]) -> int:
    lam = _clean(lam)
    return _mn(lam, (1,) * sum(lam))


def normalized_character(lam: Sequence[int], parts: Sequence[int]) -> Fraction:
    """``(n)_k chi^lambda(parts + 1^{n-k}) / dim`` with ``k = sum(parts)``; 0 if k > n."""
    lam = _clean(lam)
    n = sum(lam)
    k = sum(parts)
    if k > n:
        return Fraction(0)
    mu = list(parts) + [1] * (n - k)
    return Fraction(falling_factorial(n, k) * mn_character(lam, mu), dimension(lam))


def cycle_cumulant(lam: Sequence[int], ks: Sequence[int]) -> Fraction:
    """Cumulant of the cycle classes ``Sigma_{k_1}, ..., Sigma_{k_l}`` at ``lam``.

    Classical moment-cumulant inversion over set partitions, with the
    multi-cycle characters ``Sigma_{k_b}`` playing the role of moments.
    """
    ks = list(ks)
    total = Fraction(0)
    for blocks in set_partitions(range(len(ks))):
        size = len(blocks)
        term = Fraction((-1) ** (size - 1) * math.factorial(size - 1))
        for b in blocks:
            term *= normalized_character(lam, [ks[i] for i in b])
        total += term
    return total
