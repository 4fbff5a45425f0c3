"""Verification suites shared by the ``verify`` command and the test-suite.

Every suite returns a list of ``Check`` records. A failing check carries the
first counterexample found; randomized checks carry the seed that reproduces
them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import series
from .combinat import compositions, partitions, set_partitions
from .diagram import MultiRectangular, dilate, free_cumulants
from .kerov import (
    generalized_kerov,
    kerov_polynomial,
    linear_coefficient,
    prime_divisibility_report,
    quadratic_coefficient,
)
from .marriage import (
    IntersectionGraph,
    bad_family_factorization,
    bad_family_numbers,
    bad_family_partition,
    build_graph,
    chain_sum,
    condition_e,
    condition_e2,
    euler_characteristic,
    neighbourhood_sizes,
    prune_disconnecting_edge,
    q_admissible,
    stirling_alternating_sum,
)
from .oracle import cycle_cumulant, normalized_character
from .perm import Permutation, factorization_tables, is_transitive, long_cycle
from .polynomial import CumulantPolynomial
from .series import TruncatedSeries
from .stanley import kerov_via_derivatives

DEFAULT_SEED = 20240601


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seed: int | None = None
    asserting: bool = True

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "passed": self.passed, "asserting": self.asserting}
        if self.detail:
            out["detail"] = self.detail
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@dataclass
class RunReport:
    command: list[str]
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if c.asserting)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "seconds": round(self.seconds, 3),
            "counts": self.counts,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


def _s(x) -> str:
    return str(x)


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------

def _kerov_cache(max_k: int) -> dict[int, CumulantPolynomial]:
    return {k: kerov_polynomial(k).polynomial for k in range(1, max_k + 1)}


def suite_oracle_identity(max_boxes: int = 8, max_k: int = 6, **_) -> list[Check]:
    """Sigma_k^lambda from characters equals K_k at the free cumulants of lambda."""
    polys = _kerov_cache(max_k)
    failure = None
    tried = 0
    for n in range(1, max_boxes + 1):
        for lam in partitions(n):
            r = free_cumulants(lam, max_k + 1)
            for k, poly in polys.items():
                tried += 1
                want = normalized_character(lam, [k])
                got = poly.evaluate(r.coeffs)
                if want != got and failure is None:
                    failure = {"lambda": list(lam), "k": k, "oracle": _s(want), "polynomial": _s(got)}
    return [Check("oracle-identity", f"|lambda|<={max_boxes}, k<={max_k}", failure is None,
                  failure or {"cases": tried})]


def suite_dual_route(max_k: int = 7, **_) -> list[Check]:
    checks = []
    for k in range(1, max_k + 1):
        a = kerov_polynomial(k).polynomial
        b = kerov_via_derivatives(k)
        detail = {} if a == b else {"enumeration": a.to_text(), "derivatives": b.to_text()}
        checks.append(Check("dual-route", f"k={k}", a == b, detail))
    return checks


def suite_condition_equivalence(max_k: int = 6, **_) -> list[Check]:
    """(e) <=> (e2) <=> q-admissible, and pruned graphs never pass (e)."""
    equivalence_failure = pruning_failure = None
    graphs = colorings = 0
    for k in range(1, min(max_k, 6) + 1):
        seen = set()
        for t in factorization_tables(long_cycle(k), threads=1):
            for row in range(len(t)):
                c2 = int(t.c2[row])
                key = (int(t.c1[row]), tuple(t.masks[row, :c2].tolist()))
                if key in seen:
                    continue
                seen.add(key)
                g = IntersectionGraph(*key)
                sizes = neighbourhood_sizes(g)
                pruned = prune_disconnecting_edge(g)
                graphs += 1
                for q in compositions(key[0] + c2, c2, minimum=2):
                    colorings += 1
                    e = condition_e(g, q, sizes)
                    if pruned and e and pruning_failure is None:
                        pruning_failure = {"k": k, "whites": key[0], "masks": list(key[1]), "q": list(q)}
                    verdicts = (e, condition_e2(g, q), q_admissible(g, q))
                    if len(set(verdicts)) != 1 and equivalence_failure is None:
                        equivalence_failure = {
                            "k": k, "whites": key[0], "masks": list(key[1]), "q": list(q),
                            "e": verdicts[0], "e2": verdicts[1], "q_admissible": verdicts[2],
                        }
    stats = {"graphs": graphs, "colorings": colorings}
    return [
        Check("condition-equivalence", "e == e2 == q_admissible", equivalence_failure is None,
              equivalence_failure or stats),
        Check("condition-equivalence", "pruning soundness", pruning_failure is None, pruning_failure or stats),
    ]


def random_closure_family(rng: random.Random, ground: int) -> list[int]:
    """A random nonempty family with ``A & B in F or A | B in F`` for all members."""
    family = {rng.randrange(1 << ground) for _ in range(rng.randint(1, 6))}
    while True:
        missing = [
            (a, b) for a in family for b in family
            if (a & b) not in family and (a | b) not in family
        ]
        if not missing:
            return sorted(family)
        a, b = rng.choice(missing)
        family.add(a & b if rng.random() < 0.5 else a | b)


def _random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def suite_lemmas(seed: int = DEFAULT_SEED, families: int = 200, max_r: int = 5, **_) -> list[Check]:
    rng = random.Random(seed)
    checks = []

    failure = None
    for _i in range(families):
        fam = random_closure_family(rng, rng.randint(1, 6))
        if euler_characteristic(fam) != 1 and failure is None:
            failure = {"family": fam, "chi": euler_characteristic(fam)}
    checks.append(Check("lemmas", f"Euler characteristic of {families} closure families", failure is None,
                        failure or {}, seed))

    bad = [n for n in range(1, 13) if stirling_alternating_sum(n) != (-1) ** n]
    checks.append(Check("lemmas", "Stirling alternating sum, n<=12", not bad, {"n": bad} if bad else {}))

    failure = None
    trials = 0
    while trials < 300:
        n = rng.randint(1, 7)
        s1, s2 = _random_permutation(rng, n), _random_permutation(rng, n)
        if not is_transitive([s1, s2], n):
            continue
        g = build_graph(s1, s2)
        c1, c2 = s1.num_cycles, s2.num_cycles
        if c1 < c2:
            continue
        trials += 1
        for q in compositions(c1 + c2, c2, minimum=2):
            fam = bad_family_factorization(g, q)
            want = 1 if not fam else 0
            if chain_sum(fam) != want and failure is None:
                failure = {"sigma1": list(s1.images), "sigma2": list(s2.images), "q": list(q)}
    checks.append(Check("lemmas", "chain sum over bad factorization families", failure is None,
                        failure or {"pairs": trials}, seed))

    failure = None
    for _i in range(400):
        r = rng.randint(1, max_r)
        ns = [rng.randint(1, 6) for _ in range(r)]
        if rng.random() < 0.3:
            ks = list(ns)
        else:
            ks = [rng.randint(1, 6) for _ in range(r)]
            ks[-1] += sum(ns) - sum(ks)
        want = (-1) ** (r - 1) if ks == ns else 0
        if chain_sum(bad_family_numbers(ks, ns)) != want and failure is None:
            failure = {"k": ks, "n": ns}
    checks.append(Check("lemmas", f"chain sum over bad number families, r<={max_r}", failure is None,
                        failure or {}, seed))

    failure = None
    for _i in range(400):
        r = rng.randint(1, max_r)
        ns = [rng.randint(2, 6) for _ in range(r)]
        blocks = rng.choice(list(set_partitions(range(r))))
        if rng.random() < 0.3:
            phi = [sum(ns[i] for i in b) for b in blocks]
        else:
            phi = _random_phi(rng, blocks, sum(ns))
            if phi is None:
                continue
        exact = all(phi[j] == sum(ns[i] for i in b) for j, b in enumerate(blocks))
        want = (-1) ** (len(blocks) - 1) if exact else 0
        if chain_sum(bad_family_partition(blocks, phi, ns)) != want and failure is None:
            failure = {"n": ns, "blocks": blocks, "phi": phi}
    checks.append(Check("lemmas", f"chain sum over bad partition families, r<={max_r}", failure is None,
                        failure or {}, seed))
    return checks


def _random_phi(rng: random.Random, blocks, total: int) -> list[int] | None:
    floor = [len(b) for b in blocks]
    spare = total - sum(floor)
    if spare < 0:
        return None
    phi = list(floor)
    for _ in range(spare):
        phi[rng.randrange(len(phi))] += 1
    return phi


def suite_divisibility(primes=(3, 5, 7), **_) -> list[Check]:
    checks = []
    for p in primes:
        try:
            first, second = prime_divisibility_report(p)
            checks.append(Check("divisibility", f"p={p}", True, {"first": first.to_text(), "second": second.to_text()}))
        except ArithmeticError as exc:
            checks.append(Check("divisibility", f"p={p}", False, {"error": str(exc)}))
    return checks


def random_diagram(rng: random.Random, bands: int | None = None) -> MultiRectangular:
    bands = bands or rng.randint(1, 4)
    p = [Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range(bands)]
    q = sorted({Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range(bands)}, reverse=True)
    return MultiRectangular(tuple(p[: len(q)]), tuple(q))


def _random_series(rng: random.Random, role: str, order: int) -> TruncatedSeries:
    return TruncatedSeries(role, tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order)))


def noncrossing_partitions(n: int):
    for blocks in set_partitions(range(n)):
        if all(
            not (a < c < b < d or c < a < d < b)
            for x in blocks for y in blocks if x is not y
            for a, b in zip(x, x[1:]) for c, d in zip(y, y[1:])
        ):
            yield blocks


def moments_by_noncrossing(r: TruncatedSeries, n: int) -> Fraction:
    total = Fraction(0)
    for blocks in noncrossing_partitions(n):
        term = Fraction(1)
        for b in blocks:
            term *= r[len(b)]
        total += term
    return total


def suite_homogeneity(seed: int = DEFAULT_SEED, diagrams: int = 50, order: int = 10, **_) -> list[Check]:
    rng = random.Random(seed)
    checks = []
    failure = None
    for _i in range(diagrams):
        d = random_diagram(rng)
        base = free_cumulants(d, 8)
        for s in (Fraction(2), Fraction(3, 2)):
            scaled = free_cumulants(dilate(d, s), 8)
            for k in range(1, 9):
                if scaled[k] != s ** k * base[k] and failure is None:
                    failure = {"diagram": d.to_json(), "s": _s(s), "k": k}
    checks.append(Check("homogeneity", f"R_k(s*lambda) = s^k R_k, {diagrams} diagrams", failure is None,
                        failure or {}, seed))

    failure = None
    for _i in range(20):
        for role in series.ROLES:
            x = _random_series(rng, role, order)
            if role == "s-functionals":
                x = TruncatedSeries(role, (Fraction(0),) + x.coeffs[1:])
            for other in series.ROLES:
                back = series.convert(series.convert(x, other), role)
                if back != x and failure is None:
                    failure = {"series": x.to_json(), "via": other}
        m = _random_series(rng, "moments", order)
        if series.lagrange_free_cumulant(m) != series.convert(m, "free-cumulants") and failure is None:
            failure = {"series": m.to_json(), "via": "lagrange"}
    checks.append(Check("homogeneity", f"M <-> R <-> S roundtrips to order {order}", failure is None,
                        failure or {}, seed))

    failure = None
    for _i in range(5):
        r = _random_series(rng, "free-cumulants", 8)
        m = series.moments_from_free_cumulants(r)
        for n in range(1, 9):
            if m[n] != moments_by_noncrossing(r, n) and failure is None:
                failure = {"cumulants": r.to_json(), "n": n}
    checks.append(Check("homogeneity", "moments = non-crossing sums, n<=8", failure is None, failure or {}, seed))
    return checks


def suite_generalized(max_parts_sum: int = 6, max_boxes: int = 7, **_) -> list[Check]:
    checks = []
    one_one = generalized_kerov([1, 1]).polynomial
    checks.append(Check("generalized", "K_{1,1} = R2", one_one == CumulantPolynomial.variable(2),
                        {"got": one_one.to_text()}))
    for total in range(1, max_parts_sum + 1):
        for parts in partitions(total):
            poly = generalized_kerov(parts).polynomial
            top = max(poly.indices(), default=2)
            sign = (-1) ** (len(parts) - 1)
            failure = None
            for n in range(1, max_boxes + 1):
                for lam in partitions(n):
                    r = free_cumulants(lam, max(top, 2))
                    want = sign * cycle_cumulant(lam, parts)
                    got = poly.evaluate(r.coeffs)
                    if want != got and failure is None:
                        failure = {"lambda": list(lam), "cumulant": _s(want), "polynomial": _s(got)}
            checks.append(Check("generalized", f"parts={list(parts)}", failure is None,
                                failure or {"polynomial": poly.to_text()}))
    return checks


def suite_special_terms(max_k: int = 7, **_) -> list[Check]:
    polys = _kerov_cache(max_k)
    lin = quad = None
    for k, poly in polys.items():
        for l in range(2, k + 2):
            if linear_coefficient(k, l) != poly.coefficient([l]) and lin is None:
                lin = {"k": k, "l": l, "count": linear_coefficient(k, l), "coefficient": _s(poly.coefficient([l]))}
            for l2 in range(l, k + 2):
                got, want = quadratic_coefficient(k, l, l2), poly.coefficient([l, l2])
                if got != want and quad is None:
                    quad = {"k": k, "l1": l, "l2": l2, "count": got, "coefficient": _s(want)}
    return [
        Check("special-terms", f"linear coefficients, k<={max_k}", lin is None, lin or {}),
        Check("special-terms", f"quadratic coefficients, k<={max_k}", quad is None, quad or {}),
    ]


def suite_goulden_rattan(max_k: int = 7, **_) -> list[Check]:
    C = lambda i: CumulantPolynomial.variable(i, "C")  # noqa: E731
    polys = _kerov_cache(max(max_k, 4))
    expected = {3: C(2), 4: Fraction(5, 2) * C(3)}
    checks = []
    for k in range(3, max(max_k, 4) + 1):
        L = series.goulden_rattan_L(k, polys[k])
        if k in expected:
            checks.append(Check("goulden-rattan", f"L_{k}", L == expected[k], {"L": L.to_text()}))
        else:
            checks.append(Check("goulden-rattan", f"L_{k} nonnegative", L.is_nonnegative(),
                                {"L": L.to_text()}, asserting=False))
    return checks


SUITES: dict[str, Callable[..., list[Check]]] = {
    "oracle-identity": suite_oracle_identity,
    "dual-route": suite_dual_route,
    "condition-equivalence": suite_condition_equivalence,
    "lemmas": suite_lemmas,
    "divisibility": suite_divisibility,
    "homogeneity": suite_homogeneity,
    "generalized": suite_generalized,
    "special-terms": suite_special_terms,
    "goulden-rattan": suite_goulden_rattan,
}


def run_suites(names, command=(), **options) -> RunReport:
    report = RunReport(list(command))
    start = time.perf_counter()
    for name in names:
        report.checks.extend(SUITES[name](**options))
    report.seconds = time.perf_counter() - start
    report.counts = {
        "checks": len(report.checks),
        "failed": sum(1 for c in report.checks if c.asserting and not c.passed),
    }
    return report
