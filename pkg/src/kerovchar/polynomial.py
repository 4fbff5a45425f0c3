"""Sparse exact polynomials in indexed variables R_1, R_2, ... (or C_k, S_k).

A monomial is a tuple of ``(index, exponent)`` pairs sorted by index, so
``R_3 R_2^2`` is ``((2, 2), (3, 1))``. Coefficients are ``int`` when integral
and ``Fraction`` otherwise; zero coefficients are never stored.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

Monomial = tuple[tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def monomial(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    """Canonical monomial from an index -> exponent mapping (zeros dropped)."""
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: dict[int, int] = {}
    for i, e in items:
        i, e = int(i), int(e)
        if i < 1 or e < 0:
            raise ValueError(f"bad factor index={i} exponent={e}")
        if e:
            acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


def monomial_from_factors(indices: Iterable[int]) -> Monomial:
    """``[3, 2, 2]`` -> R_3 R_2^2."""
    acc: dict[int, int] = {}
    for i in indices:
        acc[i] = acc.get(i, 0) + 1
    return monomial(acc)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for i, e in b:
        acc[i] = acc.get(i, 0) + e
    return tuple(sorted(acc.items()))


def weighted_degree(m: Monomial) -> int:
    return sum(i * e for i, e in m)


def factor_count(m: Monomial) -> int:
    return sum(e for _, e in m)


class CumulantPolynomial:
    """Exact polynomial with rational coefficients in indexed variables."""

    __slots__ = ("terms", "symbol")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, symbol: str = "R"):
        clean: dict[Monomial, object] = {}
        for m, c in (terms or {}).items():
            c = _norm(c)
            if c != 0:
                clean[m] = c
        self.terms = clean
        self.symbol = symbol

    # -- constructors ------------------------------------------------------

    @classmethod
    def variable(cls, index: int, symbol: str = "R") -> "CumulantPolynomial":
        return cls({((index, 1),): 1}, symbol)

    @classmethod
    def constant(cls, value, symbol: str = "R") -> "CumulantPolynomial":
        return cls({ONE_MONOMIAL: value}, symbol)

    @classmethod
    def zero(cls, symbol: str = "R") -> "CumulantPolynomial":
        return cls({}, symbol)

    @classmethod
    def from_factor_counts(cls, counts: Mapping[tuple[int, ...], int], symbol: str = "R"):
        """Build from ``{(3, 2, 2): 5, ...}`` style factor lists."""
        terms: dict[Monomial, int] = {}
        for factors, c in counts.items():
            m = monomial_from_factors(factors)
            terms[m] = terms.get(m, 0) + c
        return cls(terms, symbol)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "CumulantPolynomial":
        if isinstance(other, CumulantPolynomial):
            return other
        return CumulantPolynomial.constant(other, self.symbol)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CumulantPolynomial(out, self.symbol)

    __radd__ = __add__

    def __neg__(self):
        return CumulantPolynomial({m: -c for m, c in self.terms.items()}, self.symbol)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CumulantPolynomial):
            other = _norm(other)
            return CumulantPolynomial({m: c * other for m, c in self.terms.items()}, self.symbol)
        out: dict[Monomial, object] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return CumulantPolynomial(out, self.symbol)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        return CumulantPolynomial({m: Fraction(c) / scalar for m, c in self.terms.items()}, self.symbol)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out = CumulantPolynomial.constant(1, self.symbol)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, CumulantPolynomial):
            return self.terms == other.terms
        try:
            return self.terms == CumulantPolynomial.constant(other).terms
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"CumulantPolynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # -- inspection --------------------------------------------------------

    def coefficient(self, m: Monomial | Mapping[int, int] | Sequence[int]):
        if isinstance(m, Mapping):
            m = monomial(m)
        elif m and not isinstance(m[0], tuple):
            m = monomial_from_factors(m)
        return self.terms.get(tuple(m), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def indices(self) -> set[int]:
        return {i for m in self.terms for i, _ in m}

    def degree(self) -> int:
        """Largest weighted degree sum(i * e) of a monomial (R_i has degree i)."""
        return max((weighted_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {weighted_degree(m) for m in self.terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    # -- calculus / evaluation ---------------------------------------------

    def evaluate(self, values):
        """Evaluate with ``values[i]`` substituted for variable ``i``.

        ``values`` may be a mapping or a sequence indexed from 1 (``values[0]``
        is the value of variable 1).
        """
        if isinstance(values, Mapping):
            get = values.__getitem__
        else:
            get = lambda i: values[i - 1]  # noqa: E731
        total = 0
        for m, c in self.terms.items():
            term = c
            for i, e in m:
                term = term * get(i) ** e
            total = total + term
        return total

    def substitute(self, images: Mapping[int, "CumulantPolynomial"], symbol: str | None = None):
        """Replace each variable by a polynomial (all variables must be mapped)."""
        if symbol is None:
            symbol = next(iter(images.values())).symbol if images else self.symbol
        result = CumulantPolynomial.zero(symbol)
        powers: dict[tuple[int, int], CumulantPolynomial] = {}
        for m, c in self.terms.items():
            term = CumulantPolynomial.constant(c, symbol)
            for i, e in m:
                key = (i, e)
                if key not in powers:
                    powers[key] = images[i] ** e
                term = term * powers[key]
            result = result + term
        return result

    def derivative_at_zero(self, indices: Sequence[int]):
        """The mixed partial derivative d/dX_{i1} ... d/dX_{ir} at X = 0."""
        target = monomial_from_factors(indices)
        c = self.terms.get(target, 0)
        if not c:
            return 0
        return c * math.prod(math.factorial(e) for _, e in target)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Display order: weighted degree descending, then exponent vectors
        compared from the largest index downwards, descending."""
        top = max(self.indices(), default=0)

        def key(item):
            m, _ = item
            exps = dict(m)
            return (weighted_degree(m), tuple(exps.get(i, 0) for i in range(top, 0, -1)))

        return sorted(self.terms.items(), key=key, reverse=True)

    def to_text(self) -> str:
        return self._render(latex=False)

    def to_latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            factors = []
            for i, e in reversed(m):
                if latex:
                    f = f"{self.symbol}_{{{i}}}" if i >= 10 else f"{self.symbol}_{i}"
                    factors.append(f + (f"^{{{e}}}" if e > 1 else ""))
                else:
                    factors.append(f"{self.symbol}{i}" + (f"^{e}" if e > 1 else ""))
            if latex:
                body = "".join(factors)
                if isinstance(mag, Fraction):
                    coeff = f"\\frac{{{mag.numerator}}}{{{mag.denominator}}}"
                else:
                    coeff = "" if (mag == 1 and factors) else str(mag)
                text = coeff + body
            else:
                body = " ".join(factors)
                coeff = "" if (mag == 1 and factors) else str(mag)
                text = f"{coeff} {body}".strip()
            if idx == 0:
                pieces.append(("-" if sign == "-" else "") + text)
            else:
                pieces.append(f" {sign} {text}")
        return "".join(pieces)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for m, c in self.sorted_terms():
            c = Fraction(c)
            terms.append({
                "exponents": {str(i): e for i, e in m},
                "num": str(c.numerator),
                "den": str(c.denominator),
            })
        return {"type": "polynomial", "variable": self.symbol, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "CumulantPolynomial":
        terms: dict[Monomial, Fraction] = {}
        for t in data["terms"]:
            m = monomial({int(i): int(e) for i, e in t["exponents"].items()})
            terms[m] = terms.get(m, 0) + Fraction(int(t["num"]), int(t.get("den", "1")))
        return cls(terms, data.get("variable", "R"))


def variables(symbol: str, upto: int) -> list[CumulantPolynomial]:
    """``[X_1, ..., X_upto]`` as polynomials."""
    return [CumulantPolynomial.variable(i, symbol) for i in range(1, upto + 1)]
