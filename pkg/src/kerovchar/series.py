"""Moments, free cumulants and S-functionals of a measure, exactly.

A measure is described by one of three truncated sequences ``c_1..c_N``:

* moments ``M_n``, with ``G(z) = sum_n M_n z^{-n-1}`` (``M_0 = 1``),
* S-functionals ``S_n``, with ``log(z G(z)) = sum_n S_n z^{-n}``,
* free cumulants ``R_n``, with ``G^{<-1>}(z) - 1/z = sum_n R_n z^{n-1}``.

All conversions are order preserving: ``c_1..c_N`` in gives ``c_1..c_N`` out.
The closed forms below (sums over compositions weighted by falling
factorials) are evaluated through powers of the generating series, so the
same code runs with ``Fraction`` coefficients or with ``CumulantPolynomial``
coefficients when a symbolic answer is wanted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polynomial import CumulantPolynomial, monomial, variables

ROLES = ("moments", "free-cumulants", "s-functionals")


class InsufficientOrder(ValueError):
    pass


def falling_factorial(a: int, b: int) -> int:
    """``(a)_b = a (a-1) ... (a-b+1)``; ``(a)_0 = 1``."""
    out = 1
    for i in range(b):
        out *= a - i
    return out


@dataclass(frozen=True)
class TruncatedSeries:
    role: str
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.role not in ROLES:
            raise ValueError(f"role must be one of {ROLES}, got {self.role!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        """1-based access: ``series[n]`` is ``c_n``."""
        if n < 1:
            raise IndexError("series are indexed from 1")
        return self.coeffs[n - 1]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise InsufficientOrder(f"need order {order}, have {self.order}")
        return TruncatedSeries(self.role, self.coeffs[:order])

    def to_json(self) -> dict:
        return {
            "type": "series",
            "role": self.role,
            "order": self.order,
            "coefficients": [{"num": str(c.numerator), "den": str(c.denominator)} for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data) -> "TruncatedSeries":
        coeffs = []
        for c in data["coefficients"]:
            if isinstance(c, dict):
                coeffs.append(Fraction(int(c["num"]), int(c.get("den", "1"))))
            else:
                coeffs.append(Fraction(str(c)))
        out = cls(data["role"], tuple(coeffs))
        if "order" in data and int(data["order"]) != out.order:
            raise ValueError(f"declared order {data['order']} but {out.order} coefficients given")
        return out


def _require(series: TruncatedSeries, role: str) -> None:
    if series.role != role:
        raise ValueError(f"expected a {role} series, got {series.role}")


# --------------------------------------------------------------------------
# generic truncated power series in a formal variable w, index 0..N
# --------------------------------------------------------------------------

def _mul(a: Sequence, b: Sequence, n: int) -> list:
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if _is_zero(ai):
            continue
        for j in range(0, n + 1 - i):
            if j >= len(b):
                break
            bj = b[j]
            if _is_zero(bj):
                continue
            out[i + j] = out[i + j] + ai * bj
    return out


def _is_zero(x) -> bool:
    if isinstance(x, CumulantPolynomial):
        return not x
    return x == 0


def _inverse(a: Sequence, n: int) -> list:
    """1 / a for a power series with ``a[0] == 1``."""
    if a[0] != 1:
        raise ValueError("series inverse implemented for constant term 1")
    out = [0] * (n + 1)
    out[0] = Fraction(1)
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            if i < len(a) and not _is_zero(a[i]):
                acc = acc + a[i] * out[k - i]
        out[k] = -acc
    return out


def _log1p(a: Sequence, n: int) -> list:
    """log(1 + a) for ``a[0] == 0`` via f' = a' / (1 + a)."""
    one_plus = [Fraction(1)] + list(a[1 : n + 1])
    inv = _inverse(one_plus, n)
    deriv = [k * a[k] if k < len(a) else 0 for k in range(1, n + 1)]
    q = _mul(deriv, inv, n - 1) if n >= 1 else []
    return [0] + [q[k - 1] * Fraction(1, k) for k in range(1, n + 1)]


def _exp(a: Sequence, n: int) -> list:
    """exp(a) for ``a[0] == 0`` via f' = a' f."""
    out = [0] * (n + 1)
    out[0] = Fraction(1)
    for k in range(1, n + 1):
        acc = 0
        for i in range(1, k + 1):
            if i < len(a) and not _is_zero(a[i]):
                acc = acc + i * a[i] * out[k - i]
        out[k] = acc * Fraction(1, k)
    return out


def _powers(a: Sequence, n: int) -> list[list]:
    """``[a^0, a^1, ..., a^n]`` truncated at degree n; ``a[0]`` must be 0."""
    out = [[Fraction(1)] + [0] * n]
    for _ in range(n):
        out.append(_mul(out[-1], a, n))
    return out


def _composition_sums(c: Sequence, n: int) -> list[list]:
    """``table[l][m] = sum over compositions k_1+..+k_l = m of c_{k_1}..c_{k_l}``."""
    gen = [0] + list(c[:n])
    return _powers(gen, n)


# --------------------------------------------------------------------------
# closed-form conversions (generic coefficients)
# --------------------------------------------------------------------------

def _moments_from_r(r: Sequence, n: int) -> list:
    table = _composition_sums(r, n)
    out = []
    for m in range(1, n + 1):
        acc = 0
        for l in range(1, m + 1):
            coef = Fraction(falling_factorial(m, l - 1), math.factorial(l))
            if not _is_zero(table[l][m]):
                acc = acc + coef * table[l][m]
        out.append(acc)
    return out


def _s_from_r(r: Sequence, n: int) -> list:
    table = _composition_sums(r, n)
    out = []
    for m in range(1, n + 1):
        acc = 0
        for l in range(1, m + 1):
            coef = Fraction(falling_factorial(m - 1, l - 1), math.factorial(l))
            if coef and not _is_zero(table[l][m]):
                acc = acc + coef * table[l][m]
        out.append(acc)
    return out


def _r_from_s(s: Sequence, n: int) -> list:
    table = _composition_sums(s, n)
    out = []
    for m in range(1, n + 1):
        acc = 0
        for l in range(1, m + 1):
            coef = Fraction((1 - m) ** (l - 1), math.factorial(l))
            if coef and not _is_zero(table[l][m]):
                acc = acc + coef * table[l][m]
        out.append(acc)
    return out


def _r_from_moments_lagrange(moments: Sequence, n: int) -> list:
    """``R_k = -(1/(k-1)) [z^-1] G(z)^{-(k-1)}`` for k >= 2 and ``R_1 = M_1``.

    With ``w = 1/z`` and ``H(w) = 1 / (1 + M_1 w + M_2 w^2 + ...)`` this reads
    ``R_k = -(1/(k-1)) [w^k] H(w)^{k-1}``.
    """
    if n == 0:
        return []
    h = _inverse([Fraction(1)] + list(moments[:n]), n)
    out = [moments[0]]
    power = h
    for k in range(2, n + 1):
        out.append(-Fraction(1, k - 1) * power[k])
        power = _mul(power, h, n)
    return out


# --------------------------------------------------------------------------
# public API on TruncatedSeries
# --------------------------------------------------------------------------

def moments_from_free_cumulants(r: TruncatedSeries) -> TruncatedSeries:
    _require(r, "free-cumulants")
    return TruncatedSeries("moments", tuple(_moments_from_r(r.coeffs, r.order)))


def s_from_r(r: TruncatedSeries) -> TruncatedSeries:
    _require(r, "free-cumulants")
    return TruncatedSeries("s-functionals", tuple(_s_from_r(r.coeffs, r.order)))


def r_from_s(s: TruncatedSeries) -> TruncatedSeries:
    _require(s, "s-functionals")
    return TruncatedSeries("free-cumulants", tuple(_r_from_s(s.coeffs, s.order)))


def lagrange_free_cumulant(moments: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Free cumulants ``R_1..R_order`` from moments by Lagrange inversion.

    ``R_k`` needs ``M_1..M_k``.
    """
    _require(moments, "moments")
    order = moments.order if order is None else order
    if order > moments.order:
        raise InsufficientOrder(f"R_{order} needs M_1..M_{order}, only {moments.order} given")
    return TruncatedSeries("free-cumulants", tuple(_r_from_moments_lagrange(moments.coeffs, order)))


def s_from_moments(moments: TruncatedSeries) -> TruncatedSeries:
    """``S(z) = log(z G(z))`` expanded at infinity."""
    _require(moments, "moments")
    n = moments.order
    log = _log1p([0] + list(moments.coeffs), n)
    return TruncatedSeries("s-functionals", tuple(log[1:]))


def moments_from_s(s: TruncatedSeries) -> TruncatedSeries:
    """``z G(z) = exp S(z)``."""
    _require(s, "s-functionals")
    n = s.order
    e = _exp([0] + list(s.coeffs), n)
    return TruncatedSeries("moments", tuple(e[1:]))


def convert(series: TruncatedSeries, to: str) -> TruncatedSeries:
    """Convert between any two roles, routing through the direct formulas."""
    if to not in ROLES:
        raise ValueError(f"unknown role {to!r}")
    src = series.role
    if src == to:
        return series
    table = {
        ("free-cumulants", "moments"): moments_from_free_cumulants,
        ("free-cumulants", "s-functionals"): s_from_r,
        ("s-functionals", "free-cumulants"): r_from_s,
        ("s-functionals", "moments"): moments_from_s,
        ("moments", "free-cumulants"): lagrange_free_cumulant,
        ("moments", "s-functionals"): s_from_moments,
    }
    return table[(src, to)](series)


# --------------------------------------------------------------------------
# symbolic versions and derived bases
# --------------------------------------------------------------------------

def s_polynomials_in_r(order: int, centered: bool = True) -> list[CumulantPolynomial]:
    """``[S_1, ..., S_order]`` as polynomials in R (``R_1 = 0`` when centered)."""
    r = variables("R", order)
    if centered:
        r[0] = CumulantPolynomial.zero("R")
    return [_as_poly(x, "R") for x in _s_from_r(r, order)]


def r_polynomials_in_s(order: int, centered: bool = True) -> list[CumulantPolynomial]:
    """``[R_1, ..., R_order]`` as polynomials in S (``S_1 = 0`` when centered)."""
    s = variables("S", order)
    if centered:
        s[0] = CumulantPolynomial.zero("S")
    return [_as_poly(x, "S") for x in _r_from_s(s, order)]


def _as_poly(x, symbol: str) -> CumulantPolynomial:
    if isinstance(x, CumulantPolynomial):
        return CumulantPolynomial(x.terms, symbol)
    return CumulantPolynomial.constant(x, symbol)


def _partitions_min2(k: int, max_part: int | None = None):
    """Integer partitions of k into parts >= 2, parts non-increasing."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    for p in range(min(k, max_part), 1, -1):
        for rest in _partitions_min2(k - p, p):
            yield (p,) + rest


def c_from_r(order: int) -> list[CumulantPolynomial]:
    """``[C_2, ..., C_order]`` in free cumulants.

    ``C_k = sum over 2 j_2 + 3 j_3 + ... = k`` of the multinomial
    ``(j_2 + j_3 + ...)! / (j_2! j_3! ...)`` times ``prod ((i-1) R_i)^{j_i}``.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    out = []
    for k in range(2, order + 1):
        terms = {}
        for parts in _partitions_min2(k):
            counts: dict[int, int] = {}
            for p in parts:
                counts[p] = counts.get(p, 0) + 1
            multinomial = math.factorial(len(parts))
            for j in counts.values():
                multinomial //= math.factorial(j)
            weight = math.prod((i - 1) ** j for i, j in counts.items())
            terms[monomial(counts)] = multinomial * weight
        out.append(CumulantPolynomial(terms, "R"))
    return out


def r_in_c(order: int) -> dict[int, CumulantPolynomial]:
    """Invert the triangular system ``C_k = (k-1) R_k + (products of lower R)``."""
    cs = c_from_r(order)
    r_of_c: dict[int, CumulantPolynomial] = {}
    for k in range(2, order + 1):
        ck = cs[k - 2]
        lower = CumulantPolynomial(
            {m: c for m, c in ck.terms.items() if m != ((k, 1),)}, "R"
        )
        lead = ck.coefficient({k: 1})
        if lead == 0:
            raise ArithmeticError(f"C_{k} has no R_{k} term")
        lower_c = lower.substitute(r_of_c, symbol="C") if lower else CumulantPolynomial.zero("C")
        r_of_c[k] = (CumulantPolynomial.variable(k, "C") - lower_c) / lead
    return r_of_c


def goulden_rattan_L(k: int, kerov_k: CumulantPolynomial) -> CumulantPolynomial:
    """Express ``K_k - R_{k+1}`` in the variables ``C_2, C_3, ...``."""
    rest = kerov_k - CumulantPolynomial.variable(k + 1)
    if not rest:
        return CumulantPolynomial.zero("C")
    top = max(rest.indices())
    return rest.substitute(r_in_c(top), symbol="C")
