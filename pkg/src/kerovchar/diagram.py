"""Generalized Young diagrams in multirectangular form.

French convention: band ``i`` is the rectangle ``0 <= x <= q_i`` by
``P_{i-1} <= y <= P_i`` where ``P_i = p_1 + ... + p_i``; a box at ``(x, y)``
has content ``x - y``. An integer partition ``(4, 4, 3, 1)`` is ``p = (2, 1, 1)``,
``q = (4, 3, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Sequence, Union

from . import series
from .series import InsufficientOrder, TruncatedSeries


@dataclass(frozen=True)
class MultiRectangular:
    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]

    def __post_init__(self):
        p = tuple(Fraction(x) for x in self.p)
        q = tuple(Fraction(x) for x in self.q)
        if len(p) != len(q):
            raise ValueError("p and q must have the same length")
        if any(x <= 0 for x in p + q):
            raise ValueError("band heights and widths must be > 0 (use MultiRectangular.normalized)")
        if any(a < b for a, b in zip(q, q[1:])):
            raise ValueError("q must be weakly decreasing")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def normalized(cls, p: Sequence, q: Sequence) -> "MultiRectangular":
        """Drop zero-size bands and merge neighbours of equal width."""
        bands = [(Fraction(a), Fraction(b)) for a, b in zip(p, q) if Fraction(a) != 0 and Fraction(b) != 0]
        merged: list[list[Fraction]] = []
        for a, b in bands:
            if merged and merged[-1][1] == b:
                merged[-1][0] += a
            else:
                merged.append([a, b])
        return cls(tuple(a for a, _ in merged), tuple(b for _, b in merged))

    @classmethod
    def from_partition(cls, rows: Sequence[int]) -> "MultiRectangular":
        rows = [int(r) for r in rows if int(r) != 0]
        if any(a < b for a, b in zip(rows, rows[1:])) or any(r < 0 for r in rows):
            raise ValueError(f"{rows} is not a partition")
        p, q = [], []
        for width, run in groupby(rows):
            p.append(len(list(run)))
            q.append(width)
        return cls(tuple(p), tuple(q))

    def to_partition(self) -> tuple[int, ...]:
        if any(x.denominator != 1 for x in self.p + self.q):
            raise ValueError("not an integer diagram")
        rows: list[int] = []
        for a, b in zip(self.p, self.q):
            rows.extend([int(b)] * int(a))
        return tuple(rows)

    @property
    def area(self) -> Fraction:
        return sum((a * b for a, b in zip(self.p, self.q)), Fraction(0))

    def to_json(self) -> dict:
        return {"p": [str(x) for x in self.p], "q": [str(x) for x in self.q]}

    @classmethod
    def from_json(cls, data) -> "MultiRectangular":
        if isinstance(data, list):
            return cls.from_partition(data)
        if "partition" in data:
            return cls.from_partition(data["partition"])
        return cls(tuple(Fraction(str(x)) for x in data["p"]), tuple(Fraction(str(x)) for x in data["q"]))


DiagramLike = Union[MultiRectangular, Sequence[int]]


def as_diagram(d: DiagramLike) -> MultiRectangular:
    if isinstance(d, MultiRectangular):
        return d
    return MultiRectangular.from_partition(d)


def s_functionals(d: DiagramLike, nmax: int) -> TruncatedSeries:
    """``S_n = (n-1) * integral of content^{n-2}`` over the diagram; ``S_1 = 0``.

    Over a band ``[0, q] x [y0, y1]`` the integral of ``(x-y)^{n-2}`` is
    ``-(1/((n-1) n))`` times the second difference of ``(x-y)^n`` at the corners.
    """
    if nmax < 2:
        raise ValueError("nmax must be >= 2")
    d = as_diagram(d)
    out = [Fraction(0)]
    for n in range(2, nmax + 1):
        total = Fraction(0)
        y0 = Fraction(0)
        for height, width in zip(d.p, d.q):
            y1 = y0 + height
            corners = (width - y1) ** n - (-y1) ** n - (width - y0) ** n + (-y0) ** n
            total += corners
            y0 = y1
        out.append(-total / n)
    return TruncatedSeries("s-functionals", tuple(out))


def transition_moments(d: DiagramLike, nmax: int) -> TruncatedSeries:
    """Moments of the transition measure: ``z G(z) = exp S(z)``."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    s = s_functionals(d, max(nmax, 2)).truncate(nmax)
    return series.moments_from_s(s)


def free_cumulants(d: DiagramLike, nmax: int) -> TruncatedSeries:
    """Free cumulants ``R_1 (= 0), R_2, ..., R_nmax`` of the diagram."""
    return series.r_from_s(s_functionals(d, nmax))


def dilate(d: DiagramLike, s) -> MultiRectangular:
    s = Fraction(s)
    if s <= 0:
        raise ValueError("dilation factor must be > 0")
    d = as_diagram(d)
    return MultiRectangular(tuple(s * x for x in d.p), tuple(s * x for x in d.q))


def frobenius_from_moments(moments: TruncatedSeries, k: int) -> Fraction:
    """``-(1/k) [z^-1] 1/(G(z-1) G(z-2) ... G(z-k))`` from moments ``M_1..M_{k+1}``.

    With ``w = 1/z`` and ``F(u) = 1 + sum M_n u^n`` one has
    ``1/G(z-i) = z (1 - i w) / F(w / (1 - i w))``, so the answer is
    ``-(1/k) [w^{k+1}] prod_i (1 - i w) / F(w / (1 - i w))``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = k + 1
    if moments.order < n:
        raise InsufficientOrder(f"Sigma_{k} needs M_1..M_{n}, only {moments.order} given")
    m = [Fraction(1)] + list(moments.coeffs[:n])
    product = [Fraction(1)] + [Fraction(0)] * n
    for i in range(1, k + 1):
        u = [Fraction(0)] + [Fraction(i) ** (j - 1) for j in range(1, n + 1)]
        f = [Fraction(0)] * (n + 1)
        power = [Fraction(1)] + [Fraction(0)] * n
        for deg in range(n + 1):
            if m[deg]:
                for j in range(n + 1):
                    f[j] += m[deg] * power[j]
            power = series._mul(power, u, n)
        factor = series._mul([Fraction(1), Fraction(-i)], series._inverse(f, n), n)
        product = series._mul(product, factor, n)
    return -product[n] / k


def frobenius_character(d: DiagramLike, k: int) -> Fraction:
    """``Sigma_k`` of a generalized diagram via the Frobenius formula."""
    return frobenius_from_moments(transition_moments(d, k + 1), k)
