"""Stanley polynomials of characters and the dual route to Kerov coefficients.

A function ``F`` on Young diagrams evaluated on the multirectangular diagram
``p x q`` is a polynomial in ``p_1..p_m, q_1..q_m``. For the normalized
character of a permutation ``pi`` it is given by a sum over factorizations
``s1 o s2 = pi`` and colorings ``f: C(s2) -> [m]``::

    sign(s1) * prod_{c in C(s1)} q_{max f over blacks meeting c} * prod_{b in C(s2)} p_{f(b)}

Only coefficients that are linear in every ``p_i`` are needed to recover Kerov
polynomials; these come from factorizations where ``s2`` has exactly ``m``
cycles and ``f`` is a bijection, which is what ``multilinear_coefficients``
sweeps.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from .combinat import set_partitions
from .perm import factorization_tables, multi_cycle
from .polynomial import CumulantPolynomial, _norm, monomial_from_factors
from .series import falling_factorial, r_polynomials_in_s

Exponents = tuple[int, ...]
Key = tuple[Exponents, Exponents]


class StanleyPolynomial:
    """Sparse polynomial in ``p_1..p_m, q_1..q_m`` with exact coefficients."""

    __slots__ = ("m", "terms")
    __hash__ = None

    def __init__(self, m: int, terms: Mapping[Key, object] | None = None):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        clean: dict[Key, object] = {}
        for (pe, qe), c in (terms or {}).items():
            pe, qe = tuple(int(x) for x in pe), tuple(int(x) for x in qe)
            if len(pe) != m or len(qe) != m:
                raise ValueError(f"exponent vectors must have length {m}")
            c = _norm(c)
            if c != 0:
                clean[(pe, qe)] = c
        self.terms = clean

    @classmethod
    def p(cls, i: int, m: int) -> "StanleyPolynomial":
        e = tuple(int(j == i - 1) for j in range(m))
        return cls(m, {(e, (0,) * m): 1})

    @classmethod
    def q(cls, i: int, m: int) -> "StanleyPolynomial":
        e = tuple(int(j == i - 1) for j in range(m))
        return cls(m, {((0,) * m, e): 1})

    @classmethod
    def constant(cls, value, m: int) -> "StanleyPolynomial":
        return cls(m, {((0,) * m, (0,) * m): value})

    def _coerce(self, other) -> "StanleyPolynomial":
        if isinstance(other, StanleyPolynomial):
            if other.m != self.m:
                raise ValueError("rectangle counts differ")
            return other
        return StanleyPolynomial.constant(other, self.m)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return StanleyPolynomial(self.m, out)

    __radd__ = __add__

    def __neg__(self):
        return StanleyPolynomial(self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[Key, object] = {}
        for (pa, qa), ca in self.terms.items():
            for (pb, qb), cb in other.terms.items():
                k = (tuple(x + y for x, y in zip(pa, pb)), tuple(x + y for x, y in zip(qa, qb)))
                out[k] = out.get(k, 0) + ca * cb
        return StanleyPolynomial(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = StanleyPolynomial.constant(1, self.m)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, StanleyPolynomial):
            return self.m == other.m and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"StanleyPolynomial(m={self.m}, {self.to_text()!r})"

    def coefficient(self, p_exps: Sequence[int], q_exps: Sequence[int]):
        return self.terms.get((tuple(p_exps), tuple(q_exps)), 0)

    def evaluate(self, p: Sequence, q: Sequence) -> Fraction:
        if len(p) != self.m or len(q) != self.m:
            raise ValueError(f"need {self.m} heights and widths")
        p = [Fraction(x) for x in p]
        q = [Fraction(x) for x in q]
        total = Fraction(0)
        for (pe, qe), c in self.terms.items():
            term = Fraction(c)
            for x, e in zip(p, pe):
                term *= x ** e
            for x, e in zip(q, qe):
                term *= x ** e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Key, object]]:
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0][0]) - sum(kv[0][1]), kv[0]))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (pe, qe), c in self.sorted_terms():
            factors = [f"p{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(pe) if e]
            factors += [f"q{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(qe) if e]
            body = " ".join(factors)
            mag = abs(c)
            lead = "" if mag == 1 and body else str(mag)
            piece = " ".join(x for x in (lead, body) if x)
            if not parts:
                parts.append(piece if c > 0 else "-" + piece)
            else:
                parts.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "type": "stanley",
            "m": self.m,
            "terms": [
                {"p": list(pe), "q": list(qe), "coefficient": str(c)}
                for (pe, qe), c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "StanleyPolynomial":
        terms = {(tuple(t["p"]), tuple(t["q"])): Fraction(t["coefficient"]) for t in data["terms"]}
        return cls(int(data["m"]), terms)


# --------------------------------------------------------------------------
# factorization sweep
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _graph_census(parts: tuple[int, ...], transitive_only: bool) -> tuple[tuple[int, tuple[int, ...], int], ...]:
    """Distinct ``(|C(s1)|, black masks)`` with their multiplicities."""
    census: Counter = Counter()
    for t in factorization_tables(multi_cycle(parts), threads=1):
        rows = np.nonzero(t.connected)[0] if transitive_only else range(len(t))
        for r in rows:
            c2 = int(t.c2[r])
            census[(int(t.c1[r]), tuple(t.masks[r, :c2].tolist()))] += 1
    return tuple((c1, masks, mult) for (c1, masks), mult in sorted(census.items()))


def _white_adjacency(c1: int, masks: Sequence[int]) -> list[list[int]]:
    return [[b for b, m in enumerate(masks) if m >> w & 1] for w in range(c1)]


@lru_cache(maxsize=None)
def _stanley_cached(parts: tuple[int, ...], m: int, transitive_only: bool) -> StanleyPolynomial:
    n = sum(parts)
    terms: Counter = Counter()
    for c1, masks, mult in _graph_census(parts, transitive_only):
        sign = -1 if (n - c1) % 2 else 1
        adjacency = _white_adjacency(c1, masks)
        for labels in itertools.product(range(m), repeat=len(masks)):
            pe = [0] * m
            for lab in labels:
                pe[lab] += 1
            qe = [0] * m
            for blacks in adjacency:
                qe[max(labels[b] for b in blacks)] += 1
            terms[(tuple(pe), tuple(qe))] += sign * mult
    return StanleyPolynomial(m, terms)


def stanley_character(parts: Sequence[int], m: int, transitive_only: bool = False) -> StanleyPolynomial:
    """Stanley polynomial of the normalized character of ``multi_cycle(parts)``.

    With ``transitive_only`` only factorizations generating a transitive group
    are kept.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return _stanley_cached(tuple(int(x) for x in parts), m, bool(transitive_only))


@lru_cache(maxsize=None)
def _multilinear_cached(parts: tuple[int, ...], m: int, transitive_only: bool) -> dict[Exponents, int]:
    n = sum(parts)
    table: Counter = Counter()
    for c1, masks, mult in _graph_census(parts, transitive_only):
        if len(masks) != m:
            continue
        sign = -1 if (n - c1) % 2 else 1
        adjacency = _white_adjacency(c1, masks)
        for labels in itertools.permutations(range(m)):
            qe = [0] * m
            for blacks in adjacency:
                qe[max(labels[b] for b in blacks)] += 1
            table[tuple(qe)] += sign * mult
    return {k: v for k, v in table.items() if v}


def multilinear_coefficients(parts: Sequence[int], m: int, transitive_only: bool = False) -> dict[Exponents, int]:
    """``q-exponents -> [p_1 ... p_m q^e] F`` for the character of ``multi_cycle(parts)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return dict(_multilinear_cached(tuple(int(x) for x in parts), m, bool(transitive_only)))


def coefficient(spoly: StanleyPolynomial, p_exps: Sequence[int], q_exps: Sequence[int]):
    return spoly.coefficient(p_exps, q_exps)


def _weight(pairs: Sequence[tuple[int, int]]) -> int:
    w = 1
    for a, b in pairs:
        w *= (-1) ** (b - 1) * falling_factorial(a - 1, b - 1)
    return w


def nn_quantity(spoly: StanleyPolynomial, pairs: Sequence[tuple[int, int]]):
    """``prod (-1)^{b-1} (a-1)_{b-1}`` times ``[p_1 q_1^{a_1-1} ... p_r q_r^{a_r-1}] F``."""
    r = len(pairs)
    if r > spoly.m:
        raise ValueError(f"{r} pairs need at least {r} rectangles, have {spoly.m}")
    if any(a < 2 or b < 1 for a, b in pairs):
        raise ValueError("pairs must satisfy a >= 2, b >= 1")
    pad = (0,) * (spoly.m - r)
    pe = (1,) * r + pad
    qe = tuple(a - 1 for a, _ in pairs) + pad
    return _weight(pairs) * spoly.coefficient(pe, qe)


def _nn_from_tables(tables: Mapping[int, Mapping[Exponents, int]], pairs: Sequence[tuple[int, int]]) -> int:
    qe = tuple(a - 1 for a, _ in pairs)
    return _weight(pairs) * tables[len(pairs)].get(qe, 0)


def _derivative_multisets(k: int):
    """Nondecreasing ``(n_1..n_r)`` with ``n_i >= 2``, sum ``<= k+1`` and of the parity of ``k+1``."""
    top = k + 1

    def rec(prefix, low, total):
        if prefix and total % 2 == top % 2:
            yield tuple(prefix)
        for n in range(low, top - total + 1):
            yield from rec(prefix + [n], n, total + n)

    yield from rec([], 2, 0)


def derivative_via_stanley(k: int, ns: Sequence[int]) -> int:
    """``d^r K_k / dR_{n_1} ... dR_{n_r}`` at 0, from multilinear Stanley coefficients."""
    ns = list(ns)
    r = len(ns)
    tables = {m: _multilinear_cached((k,), m, False) for m in range(1, r + 1)}
    total = 0
    for blocks in set_partitions(range(r)):
        pairs = [(sum(ns[i] for i in b), len(b)) for b in blocks]
        total += (-1) ** (r - len(blocks)) * _nn_from_tables(tables, pairs)
    return total


def kerov_via_derivatives(k: int) -> CumulantPolynomial:
    """``K_k`` assembled coefficient by coefficient from mixed ``R``-derivatives."""
    if k < 1:
        raise ValueError("k must be >= 1")
    r_max = (k + 1) // 2
    tables = {m: _multilinear_cached((k,), m, False) for m in range(1, r_max + 1)}
    terms = {}
    for ns in _derivative_multisets(k):
        r = len(ns)
        deriv = 0
        for blocks in set_partitions(range(r)):
            pairs = [(sum(ns[i] for i in b), len(b)) for b in blocks]
            deriv += (-1) ** (r - len(blocks)) * _nn_from_tables(tables, pairs)
        if deriv:
            mult = math.prod(math.factorial(c) for c in Counter(ns).values())
            terms[monomial_from_factors(ns)] = Fraction(deriv, mult)
    return CumulantPolynomial(terms)


def quadratic_identity_sides(k: int, l1: int, l2: int, kerov_k: CumulantPolynomial | None = None) -> tuple[int, int]:
    """``(d^2 K_k / dR_{l1} dR_{l2},  [p1 p2 q1^{l1-1} q2^{l2-1}] - [p1 p2 q2^{l1+l2-2}])``.

    The second exponent is ``l1 + l2 - 2``; it is the only choice of the right
    total degree (``p``-degree plus ``q``-degree of every term of ``Sigma_k``
    is ``k + 1`` minus an even number).
    """
    if kerov_k is None:
        from .kerov import kerov_polynomial

        kerov_k = kerov_polynomial(k).polynomial
    lhs = kerov_k.derivative_at_zero([l1, l2])
    table = _multilinear_cached((k,), 2, False)
    rhs = table.get((l1 - 1, l2 - 1), 0) - table.get((0, l1 + l2 - 2), 0)
    return lhs, rhs


def quadratic_identity_check(k: int, l1: int, l2: int) -> bool:
    lhs, rhs = quadratic_identity_sides(k, l1, l2)
    return lhs == rhs


def rightmost_legs_sides(k: int, ks: Sequence[int]) -> tuple[int, int]:
    """Both sides of the block expansion of ``[p_1 q_1^{k_1-1} ... p_m q_m^{k_m-1}] Sigma_k``.

    The right side sums ``N`` over set partitions in which every block has
    ``k_i = 1`` except at its largest index, where ``k_i >= 2``.
    """
    ks = list(ks)
    m = len(ks)
    if any(x < 1 for x in ks):
        raise ValueError("exponents k_i must be >= 1")
    lhs = _multilinear_cached((k,), m, False).get(tuple(x - 1 for x in ks), 0)
    tables = {j: _multilinear_cached((k,), j, False) for j in range(1, m + 1)}
    rhs = 0
    for blocks in set_partitions(range(m)):
        ok = all(ks[max(b)] >= 2 and all(ks[i] == 1 for i in b if i != max(b)) for b in blocks)
        if ok:
            blocks = sorted(blocks, key=max)
            rhs += _nn_from_tables(tables, [(sum(ks[i] for i in b), len(b)) for b in blocks])
    return lhs, rhs


# --------------------------------------------------------------------------
# derivatives with respect to S
# --------------------------------------------------------------------------

def s_functional_stanley(n: int, m: int) -> StanleyPolynomial:
    """Stanley polynomial of ``S_n``: band ``i`` spans heights ``P_{i-1}..P_i`` and width ``q_i``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    total = StanleyPolynomial(m)
    lower = StanleyPolynomial(m)
    for i in range(1, m + 1):
        upper = lower + StanleyPolynomial.p(i, m)
        qi = StanleyPolynomial.q(i, m)
        total = total + (qi - upper) ** n - (-upper) ** n - (qi - lower) ** n + (-lower) ** n
        lower = upper
    return total * Fraction(-1, n)


def s_derivative(poly_in_r: CumulantPolynomial, ks: Sequence[int]):
    """``d^l F / dS_{k_1} ... dS_{k_l}`` at 0 for ``F`` given in free cumulants."""
    order = max(list(ks) + [max(poly_in_r.indices(), default=2)])
    rs = r_polynomials_in_s(order)
    in_s = poly_in_r.substitute({i: rs[i - 1] for i in poly_in_r.indices()}, symbol="S")
    return in_s.derivative_at_zero(list(ks))
