"""Hot loop of the whole package: sweep every factorization of a target.

For a target permutation ``t`` (0-based images) we visit every ``s2`` in
lexicographic order of its image sequence, put ``s1 = t o s2^{-1}`` and record

* ``sigma2``    -- the images of ``s2``
* ``c1``, ``c2`` -- cycle counts of ``s1`` and ``s2``
* ``masks``     -- ``masks[row, b]`` is the bitmask of cycles of ``s1`` meeting
  cycle ``b`` of ``s2`` (cycles numbered by their minimal element)
* ``connected`` -- whether the intersection graph is connected, i.e. whether
  ``<s1, s2>`` acts transitively

Two interchangeable implementations exist: an explicit-loop kernel compiled
with numba and a vectorised numpy version. They produce identical arrays.
"""

from __future__ import annotations

import itertools
import math
from typing import NamedTuple

import numpy as np

from ._accel import HAS_NUMBA, njit, resolve_backend

MAX_DEGREE = 62


class FactorizationTable(NamedTuple):
    sigma2: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    masks: np.ndarray
    connected: np.ndarray

    def __len__(self) -> int:
        return self.sigma2.shape[0]


def shard_size(n: int, first: int) -> int:
    return math.factorial(n) if first < 0 else math.factorial(n - 1)


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------

@njit
def _cycle_labels(perm, labels):
    n = perm.shape[0]
    for i in range(n):
        labels[i] = -1
    count = 0
    for i in range(n):
        if labels[i] < 0:
            j = i
            while labels[j] < 0:
                labels[j] = count
                j = perm[j]
            count += 1
    return count


@njit
def _next_permutation(a, lo):
    n = a.shape[0]
    i = n - 2
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    i += 1
    j = n - 1
    while i < j:
        a[i], a[j] = a[j], a[i]
        i += 1
        j -= 1
    return True


@njit
def _fill_table(target, start, lo, sigma2, c1, c2, masks, connected):
    n = target.shape[0]
    a = start.copy()
    inv = np.empty(n, np.int64)
    s1 = np.empty(n, np.int64)
    lab1 = np.empty(n, np.int64)
    lab2 = np.empty(n, np.int64)
    one = np.int64(1)
    row = 0
    while True:
        for x in range(n):
            inv[a[x]] = x
        for x in range(n):
            s1[x] = target[inv[x]]
        k1 = _cycle_labels(s1, lab1)
        k2 = _cycle_labels(a, lab2)
        for x in range(n):
            sigma2[row, x] = a[x]
            masks[row, x] = 0
        for x in range(n):
            masks[row, lab2[x]] |= one << lab1[x]
        c1[row] = k1
        c2[row] = k2

        reach = masks[row, 0]
        changed = True
        while changed:
            changed = False
            for b in range(k2):
                m = masks[row, b]
                if (m & reach) != 0 and (m | reach) != reach:
                    reach |= m
                    changed = True
        connected[row] = reach == (one << k1) - one

        row += 1
        if not _next_permutation(a, lo):
            break
    return row


def _table_numba(target: np.ndarray, first: int) -> FactorizationTable:
    n = target.shape[0]
    rows = shard_size(n, first)
    if first < 0:
        start = np.arange(n, dtype=np.int64)
        lo = 0
    else:
        start = np.array([first] + [x for x in range(n) if x != first], dtype=np.int64)
        lo = 1
    sigma2 = np.empty((rows, n), np.int8)
    c1 = np.empty(rows, np.int8)
    c2 = np.empty(rows, np.int8)
    masks = np.empty((rows, n), np.int64)
    connected = np.empty(rows, np.bool_)
    filled = _fill_table(target, start, lo, sigma2, c1, c2, masks, connected)
    assert filled == rows
    return FactorizationTable(sigma2, c1, c2, masks, connected)


# --------------------------------------------------------------------------
# numpy path
# --------------------------------------------------------------------------

def _labels_numpy(perms: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cycle labels (ordered by minimal element) and cycle counts, row-wise."""
    rows, n = perms.shape
    ids = np.arange(n)
    low = np.broadcast_to(ids, (rows, n)).copy()
    jump = perms.astype(np.int64, copy=True)
    span = 1
    # pointer doubling: after t rounds low[x] = min of the first 2**t orbit points
    while span < n:
        low = np.minimum(low, np.take_along_axis(low, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
        span *= 2
    is_min = low == ids
    index_of_min = np.cumsum(is_min, axis=1) - 1
    labels = np.take_along_axis(index_of_min, low, axis=1)
    return labels, is_min.sum(axis=1)


def _table_numpy(target: np.ndarray, first: int) -> FactorizationTable:
    n = target.shape[0]
    if first < 0:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    else:
        rest = [x for x in range(n) if x != first]
        perms = np.array([(first,) + p for p in itertools.permutations(rest)], dtype=np.int64)
    perms = perms.reshape(-1, n)
    rows = perms.shape[0]
    row_ids = np.arange(rows)

    inv = np.empty_like(perms)
    inv[row_ids[:, None], perms] = np.arange(n)
    s1 = target[inv]

    lab1, k1 = _labels_numpy(s1)
    lab2, k2 = _labels_numpy(perms)

    masks = np.zeros((rows, n), np.int64)
    for x in range(n):
        # each row touches one (row, black) slot per x, so no index collisions
        masks[row_ids, lab2[:, x]] |= np.left_shift(np.int64(1), lab1[:, x])

    reach = masks[:, 0].copy()
    for _ in range(n):
        touched = (masks & reach[:, None]) != 0
        reach = np.bitwise_or.reduce(np.where(touched, masks, 0), axis=1)
    connected = reach == (np.left_shift(np.int64(1), k1) - 1)

    return FactorizationTable(
        perms.astype(np.int8),
        k1.astype(np.int8),
        k2.astype(np.int8),
        masks,
        connected,
    )


def factorization_table(target, first: int = -1, backend: str | None = None) -> FactorizationTable:
    """Sweep all ``s2`` (or those with ``s2(0) == first``) for a 0-based target."""
    target = np.ascontiguousarray(target, dtype=np.int64)
    n = target.shape[0]
    if n < 1 or n > MAX_DEGREE:
        raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
    if first >= n:
        raise ValueError(f"shard index {first} out of range for degree {n}")
    if resolve_backend(backend) == "numba":
        return _table_numba(target, first)
    return _table_numpy(target, first)


__all__ = ["FactorizationTable", "factorization_table", "shard_size", "HAS_NUMBA"]
