"""Named verification suites.

Each suite runs a battery of exact checks with bounds that default to the
acceptance table, and returns a ``SuiteReport``.  A check is a family of
instances; it passes when every instance does, and a failing family keeps the
first failing instance as its witness.
"""

from __future__ import annotations

import inspect
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Callable, Iterable

from . import blm, bubbles, hochschild as hh
from . import currentalg as ca
from . import oracle
from . import symfunc as sf
from . import tracecat as tc
from . import vpres
from .partitions import count_partitions, partition, partitions_in_box, partitions_of, partitions_up_to


@dataclass
class Check:
    id: str
    params: dict
    passed: bool
    instances: int = 0
    witness: object = None

    def to_json(self) -> dict:
        out = {"id": self.id, "params": self.params, "passed": self.passed, "instances": self.instances}
        if not self.passed:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    name: str
    bounds: dict
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "suite": self.name,
            "bounds": self.bounds,
            "passed": self.passed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.id)],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), sort_keys=True)

    def text(self) -> str:
        lines = [f"suite {self.name}: {'PASS' if self.passed else 'FAIL'} ({self.elapsed:.2f}s)"]
        for c in sorted(self.checks, key=lambda c: c.id):
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  {mark} {c.id} [{c.instances} instances]")
            if not c.passed:
                lines.append(f"       witness: {json.dumps(c.witness, sort_keys=True)}")
        return "\n".join(lines)

    # -- recording -------------------------------------------------------------
    def run(self, cid: str, params: dict, cases: Iterable[tuple[object, Callable[[], tuple[bool, object]]]]):
        """Run (instance, thunk) cases; thunk returns (ok, detail)."""
        count, witness = 0, None
        for instance, thunk in cases:
            count += 1
            try:
                ok, detail = thunk()
            except Exception as exc:  # a crash is a failure with its message as witness
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            if not ok and witness is None:
                witness = {"instance": jsonable(instance), "detail": jsonable(detail)}
        self.checks.append(Check(cid, jsonable(params), witness is None, count, witness))


def jsonable(x):
    if x is None or isinstance(x, (bool, str, float)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


def _eq(lhs, rhs):
    if lhs == rhs:
        return True, None
    return False, {"lhs": str(lhs), "rhs": str(rhs)}


# ---------------------------------------------------------------------------
# sym


def suite_sym(rep: SuiteReport, lr_max=8, newton_max=12, straighten_len=4, straighten_max=4, seed=0):
    rep.run(
        "lr-vs-monomial-oracle",
        {"size_max": lr_max},
        (
            ((mu, nu), lambda mu=mu, nu=nu: _eq(sf.schur_product(mu, nu), oracle.lr_product_oracle(mu, nu)))
            for t in range(lr_max + 1)
            for k in range(t + 1)
            for mu in partitions_of(k)
            for nu in partitions_of(t - k)
        ),
    )

    def newton_e(k):
        rhs = sf.zero()
        for i in range(1, k + 1):
            rhs = rhs + sf.mul(sf.e(k - i), sf.p(i)) * (-1) ** (i - 1)
        return _eq(sf.e(k) * k, rhs)

    def newton_h(k):
        rhs = sf.zero()
        for i in range(1, k + 1):
            rhs = rhs + sf.mul(sf.h(k - i), sf.p(i))
        return _eq(sf.h(k) * k, rhs)

    rep.run("newton-elementary", {"degree_max": newton_max}, ((k, lambda k=k: newton_e(k)) for k in range(1, newton_max + 1)))
    rep.run("newton-complete", {"degree_max": newton_max}, ((k, lambda k=k: newton_h(k)) for k in range(1, newton_max + 1)))

    rng = random.Random(seed)

    def points(a):
        pts = []
        for _ in range(2):
            coords = rng.sample(range(-40, 41), a)
            pts.append(tuple(Fraction(c, rng.randint(1, 7)) for c in coords))
        return pts

    def straighten_case(seq):
        a = len(seq)
        for pt in points(a):
            if len(set(pt)) < a:
                continue
            lhs = oracle.bialternant_value(seq, pt)
            r = sf.straighten(seq)
            rhs = Fraction(0) if r is None else r[0] * oracle.schur_value(r[1], pt)
            if lhs != rhs:
                return False, {"point": [str(x) for x in pt], "bialternant": str(lhs), "straightened": str(rhs)}
        return True, None

    seqs = [
        seq
        for a in range(1, straighten_len + 1)
        for seq in product(*(range(j - a, straighten_max + 1) for j in range(1, a + 1)))
    ]
    rep.run(
        "straighten-vs-bialternant",
        {"length_max": straighten_len, "entry_max": straighten_max, "seed": seed},
        ((seq, lambda seq=seq: straighten_case(seq)) for seq in seqs),
    )

    def swap_rule(seq, k):
        m = list(seq)
        m[k], m[k + 1] = m[k + 1] - 1, m[k] + 1
        if m[k + 1] < (k + 2) - len(m) or m[k] < (k + 1) - len(m):
            return True, "outside the domain"
        return _eq(sf.schur_of_sequence(seq), -sf.schur_of_sequence(m))

    rep.run(
        "straighten-swap-rule",
        {"length_max": straighten_len, "entry_max": straighten_max},
        (((seq, k), lambda seq=seq, k=k: swap_rule(seq, k)) for seq in seqs for k in range(len(seq) - 1)),
    )


# ---------------------------------------------------------------------------
# blm and bubbles (supporting suites)


def suite_blm(rep: SuiteReport, ab_max=2, n_max=6, seed=0):
    words = sorted({blm.canonical(a, b, n) for a in range(ab_max + 1) for b in range(ab_max + 1) for n in range(-n_max, n_max + 1)})
    by_source: dict[int, list] = {}
    for w in words:
        by_source.setdefault(w.source, []).append(w)

    def assoc(x, y, z):
        X, Y, Z = (blm.BlmElement.word(w) for w in (x, y, z))
        return _eq(blm.mul(blm.mul(X, Y), Z), blm.mul(X, blm.mul(Y, Z)))

    triples = [
        (x, y, z)
        for z in words
        for y in by_source.get(z.target, [])
        for x in by_source.get(y.target, [])
    ]
    rep.run("associativity", {"ab_max": ab_max, "n_max": n_max}, (((x, y, z), lambda t=(x, y, z): assoc(*t)) for x, y, z in triples))

    def divided(n):
        lhs = blm.word_element([("E", 1), ("E", 1)], n)
        rhs = blm.BlmElement.word(blm.canonical(2, 0, n), blm.qint(2))
        return _eq(lhs, rhs)

    def ef(n):
        lhs = blm.word_element([("E", 1), ("F", 1)], n)
        rhs = blm.word_element([("F", 1), ("E", 1)], n) + blm.BlmElement.word(blm.canonical(0, 0, n), blm.qint(n))
        return _eq(lhs, rhs)

    ns = range(-n_max, n_max + 1)
    rep.run("EE-equals-[2]E2", {"n_max": n_max}, ((n, lambda n=n: divided(n)) for n in ns))
    rep.run("EF-minus-FE-equals-[n]", {"n_max": n_max}, ((n, lambda n=n: ef(n)) for n in ns))


def suite_bubbles(rep: SuiteReport, degree_max=10, seed=0):
    def fake(n):
        series = bubbles.fake_bubble_series(n, degree_max)
        for k, c in enumerate(series):
            if c.value != sf.antipode(sf.h(k)):
                return False, {"k": k, "got": str(c.value)}
        prod_ = bubbles.series_product([sf.h(k) for k in range(degree_max + 1)], [c.value for c in series])
        return prod_ == [sf.one()] + [sf.zero()] * degree_max, "series product is not 1"

    rep.run("fake-series-is-inverse", {"degree_max": degree_max}, ((n, lambda n=n: fake(n)) for n in range(-2, 3)))
    rep.run(
        "b-minus-on-generators",
        {"degree_max": degree_max},
        ((i, lambda i=i: _eq(bubbles.b_minus(sf.h(i), 0).value, sf.e(i) * (-1) ** i)) for i in range(degree_max + 1)),
    )
    rep.run(
        "commutator-identity",
        {"degree_max": degree_max},
        ((m, lambda m=m: _eq(bubbles.commutator_identity(m), sf.p(m))) for m in range(1, degree_max + 1)),
    )
    rep.run(
        "alternating-he-vanishes",
        {"degree_max": degree_max},
        ((m, lambda m=m: _eq(bubbles.alternating_he(m), sf.zero())) for m in range(1, degree_max + 1)),
    )


# ---------------------------------------------------------------------------
# plus part: presentation, leading terms


def suite_zzz(rep: SuiteReport, a_max=3, l_max=4, n=0, seed=0):
    def rect(a, l, src):
        return tc.rectangle(a, l, src)

    def commute(a, b, l, s):
        lhs = tc.compose_plus(rect(a, l, n + 2 * b), rect(b, s, n))
        rhs = tc.compose_plus(rect(b, s, n + 2 * a), rect(a, l, n))
        return _eq(lhs.x, rhs.x)

    rep.run(
        "rectangles-commute",
        {"a_max": a_max, "l_max": l_max},
        (
            ((a, b, l, s), lambda t=(a, b, l, s): commute(*t))
            for a in range(a_max + 1)
            for b in range(a_max + 1)
            for l in range(l_max + 1)
            for s in range(l_max + 1)
        ),
    )

    def unit(l, b, lam):
        y = tc.plus_basis(b, lam, n)
        left = tc.compose_plus(rect(0, l, y.target), y)
        right = tc.compose_plus(y, rect(0, l, n))
        return left == y and right == y, {"left": str(left.x), "right": str(right.x)}

    rep.run(
        "thickness-zero-is-identity",
        {"l_max": l_max},
        (
            ((l, b, lam), lambda t=(l, b, lam): unit(*t))
            for l in range(l_max + 1)
            for b in range(a_max + 1)
            for lam in partitions_up_to(l_max, b)
        ),
    )

    def binom(a, b, l):
        lhs = tc.compose_plus(rect(a, l, n + 2 * b), rect(b, l, n))
        return _eq(lhs.x, rect(a + b, l, n).x * comb(a + b, a))

    rep.run(
        "equal-rectangles-binomial",
        {"a_max": a_max, "l_max": l_max},
        (((a, b, l), lambda t=(a, b, l): binom(*t)) for a in range(a_max + 1) for b in range(a_max + 1) for l in range(l_max + 1)),
    )


def suite_ja(rep: SuiteReport, a_max=5, size_max=6, seed=0):
    cases = [(a, lam) for a in range(a_max + 1) for lam in partitions_up_to(size_max, a)]

    def triangular(a, lam):
        prod_ = tc.rect_recompose(tc.rect_sequence(lam, a), 0).x
        if prod_.coeff(lam) != 1:
            return False, {"leading": prod_.coeff(lam)}
        bad = [mu for mu in prod_.support() if mu != lam and not (mu < lam and sum(mu) == sum(lam))]
        return not bad, {"not below": [list(m) for m in bad]}

    def roundtrip(a, lam):
        acc = sf.zero(a)
        for nu, c in tc.rect_decompose(a, lam).items():
            acc = acc + tc.rect_recompose(tc.rect_sequence(nu, a), 0).x * c
        return _eq(acc, sf.schur(lam, a))

    rep.run("rectangle-products-unitriangular", {"a_max": a_max, "size_max": size_max}, (((a, lam), lambda t=(a, lam): triangular(*t)) for a, lam in cases))
    rep.run("decompose-recompose-roundtrip", {"a_max": a_max, "size_max": size_max}, (((a, lam), lambda t=(a, lam): roundtrip(*t)) for a, lam in cases))

    def leading(a, j, b, lam):
        top = partition((j,) * a + tuple(lam))
        prod_ = tc.compose_plus(tc.rectangle(a, j, 2 * b), tc.plus_basis(b, lam, 0)).x
        rest = prod_ - sf.schur(top, a + b)
        bad = [mu for mu in rest.support() if not mu < top]
        return not bad, {"product": str(prod_)}

    rep.run(
        "leading-term-lemma",
        {"a_max": a_max, "size_max": size_max},
        (
            ((a, j, b, lam), lambda t=(a, j, b, lam): leading(*t))
            for a in range(1, a_max + 1)
            for b in range(a_max - a + 1)
            for lam in partitions_up_to(size_max, b)
            for j in range((lam[0] if lam else 0) + 1, size_max + 1)
            if a * j + sum(lam) <= size_max
        ),
    )


# ---------------------------------------------------------------------------
# two-path composition


def _rect_sequences(thick_max: int, loop_max: int):
    """All sequences of (thickness >= 1, value >= 0) with bounded total thickness and loop degree."""
    out = [()]
    frontier = [((), 0, 0)]
    while frontier:
        nxt = []
        for seq, t, d in frontier:
            for k in range(1, thick_max - t + 1):
                for v in range(0, (loop_max - d) // k + 1):
                    s = seq + ((k, v),)
                    out.append(s)
                    nxt.append((s, t + k, d + k * v))
        frontier = nxt
    return out


def _transport_product(rects, n, kind):
    acc = tc.TraceElement.idempotent(n)
    for k, v in reversed(rects):
        src = acc.target
        g = tc.E_hat(k, (v,) * k, src) if kind == "E" else tc.F_hat(k, (v,) * k, src)
        acc = tc.compose(g, acc)
    return acc


def suite_qqq(rep: SuiteReport, thick_max=3, loop_max=4, n_max=4, seed=0):
    seqs = _rect_sequences(thick_max, loop_max)
    ns = range(-n_max, n_max + 1)

    def plus(rects, n):
        return _eq(tc.from_plus(tc.rect_recompose(rects, n)), _transport_product(rects, n, "E"))

    def minus(rects, n):
        return _eq(tc.rect_recompose_minus(rects, n), _transport_product(rects, n, "F"))

    params = {"thickness_max": thick_max, "loop_max": loop_max, "n_max": n_max}
    rep.run("plus-rectangle-products", params, (((r, n), lambda r=r, n=n: plus(r, n)) for r in seqs for n in ns))
    rep.run("minus-rectangle-products", params, (((r, n), lambda r=r, n=n: minus(r, n)) for r in seqs for n in ns))

    def pair(a, lam, b, mu, n):
        y = tc.plus_basis(b, mu, n)
        x = tc.plus_basis(a, lam, y.target)
        return _eq(tc.from_plus(tc.compose_plus(x, y)), tc.compose(tc.from_plus(x), tc.from_plus(y)))

    pairs = [
        (a, lam, b, mu)
        for a in range(thick_max + 1)
        for b in range(thick_max - a + 1)
        for lam in partitions_up_to(loop_max, a)
        for mu in partitions_up_to(loop_max - sum(lam), b)
    ]
    rep.run("plus-basis-pairs", params, (((p, n), lambda p=p, n=n: pair(*p, n)) for p in pairs for n in ns))


def suite_r7(rep: SuiteReport, ij_max=8, n_max=6, schur_max=12, seed=0):
    def commutator(i, j, n):
        ef = tc.compose(tc.E_hat(1, (i,), n - 2), tc.F_hat(1, (j,), n))
        fe = tc.compose(tc.F_hat(1, (j,), n + 2), tc.E_hat(1, (i,), n))
        expected = tc.TraceElement.idempotent(n) * n if i + j == 0 else tc.bubble_minus(sf.p(i + j), n)
        return _eq(ef - fe, expected)

    rep.run(
        "EF-commutator-table",
        {"ij_max": ij_max, "n_max": n_max},
        (
            ((i, j, n), lambda t=(i, j, n): commutator(*t))
            for i in range(ij_max + 1)
            for j in range(ij_max - i + 1)
            for n in range(-n_max, n_max + 1)
        ),
    )
    rep.run(
        "h-e-power-sum-identity",
        {"m_max": schur_max},
        ((m, lambda m=m: _eq(bubbles.commutator_identity(m), sf.p(m))) for m in range(1, schur_max + 1)),
    )


def suite_ap2(rep: SuiteReport, m_max=8, n_max=6, seed=0):
    def case(m, n):
        lhs = tc.compose(tc.bubble_minus(sf.p(m), n + 2), tc.E_hat(1, (), n)) - tc.compose(
            tc.E_hat(1, (), n), tc.bubble_minus(sf.p(m), n)
        )
        return _eq(lhs, tc.E_hat(1, (m,), n) * 2)

    rep.run(
        "power-sum-bubble-commutator",
        {"m_max": m_max, "n_max": n_max},
        (((m, n), lambda m=m, n=n: case(m, n)) for m in range(1, m_max + 1) for n in range(-n_max, n_max + 1)),
    )


# ---------------------------------------------------------------------------
# current algebra


def _garland_generators(loop_max: int, power_max: int, tau_max: int):
    gens = [(k, i, a) for k in "EF" for i in range(loop_max + 1) for a in range(1, power_max + 1) if i * a <= loop_max]
    gens += [("S", tau, 0) for d in range(1, tau_max + 1) for tau in partitions_of(d)]
    return gens


def _gen_element(g, n):
    kind, i, a = g
    if kind == "S":
        return ca.phi_element(sf.schur(i), n)
    return ca.generator(kind, i, a, n)


def _gen_degree(g):
    kind, i, a = g
    return sum(i) if kind == "S" else i * a


def suite_current(rep: SuiteReport, length_max=4, loop_max=5, power_max=3, tau_max=2, n_max=1, seed=0):
    gens = _garland_generators(loop_max, power_max, tau_max)
    params = {"length_max": length_max, "loop_max": loop_max, "power_max": power_max, "tau_max": tau_max, "n_max": n_max}
    products: list[tuple[tuple, int]] = []  # (generator word, source weight), leftmost generator acts last

    def walk(word, n, deg):
        if len(word) == length_max:
            return
        for g in gens:
            d = deg + _gen_degree(g)
            if d <= loop_max:
                products.append(((g,) + word, n))
                walk((g,) + word, n, d)

    for n in range(-n_max, n_max + 1):
        walk((), n, 0)

    cache: dict = {}

    def evaluate(word, n):
        """Product of the word, built right to left and memoized on suffixes."""
        if not word:
            return ca.GarlandElement.idempotent(n)
        key = (word, n)
        if key not in cache:
            rest = evaluate(word[1:], n)
            cache[key] = ca.mul(_gen_element(word[0], rest.target), rest)
        return cache[key]

    def integral(word, n):
        x = evaluate(word, n)
        ok = all(isinstance(v, int) for _, v in x.items())
        return ok, None if ok else str(x)

    rep.run("products-integral", params, (((w, n), lambda w=w, n=n: integral(w, n)) for w, n in products))

    def assoc(word, n, k):
        right = evaluate(word[k:], n)
        left = evaluate(word[:k], right.target)
        return _eq(ca.mul(left, right), evaluate(word, n))

    rep.run(
        "associativity",
        params,
        # splitting after the first letter is how products are built, so start at 2
        (((w, n, k), lambda w=w, n=n, k=k: assoc(w, n, k)) for w, n in products for k in range(2, len(w))),
    )

    def involution(word, n):
        x = evaluate(word, n)
        return _eq(ca.apply_Phi(ca.apply_Phi(x)), x)

    rep.run(
        "Phi-is-an-involution",
        params,
        (((w, n), lambda w=w, n=n: involution(w, n)) for w, n in products if len(w) <= 2),
    )


# ---------------------------------------------------------------------------
# degree zero comparison with the BLM form


def suite_k0(rep: SuiteReport, ab_max=2, n_max=6, seed=0):
    words = sorted({blm.canonical(a, b, n) for a in range(ab_max + 1) for b in range(ab_max + 1) for n in range(-n_max - 2 * ab_max, n_max + 2 * ab_max + 1)})
    by_source: dict[int, list] = {}
    for w in words:
        by_source.setdefault(w.source, []).append(w)

    def image(w):
        return tc.from_canonical(w.shape, w.a, w.b, w.n)

    def case(x, y):
        p = blm.specialize_q1(blm.mul(blm.BlmElement.word(x), blm.BlmElement.word(y)))
        lhs = tc.TraceElement.zero(y.source, x.target)
        for w, v in p.items():
            lhs = lhs + image(w) * v
        rhs = tc.compose(image(x), image(y))
        if rhs.degrees() - {0}:
            return False, {"nonzero degrees": sorted(rhs.degrees())}
        return _eq(lhs, rhs)

    pairs = [(x, y) for y in words if abs(y.source) <= n_max for x in by_source.get(y.target, [])]
    rep.run("blm-at-q1-equals-trace", {"ab_max": ab_max, "n_max": n_max}, (((x, y), lambda p=(x, y): case(*p)) for x, y in pairs))

    def ee(n):
        q_side = _eq(blm.word_element([("E", 1), ("E", 1)], n), blm.BlmElement.word(blm.canonical(2, 0, n), blm.qint(2)))
        if not q_side[0]:
            return q_side
        return _eq(tc.compose(tc.E_hat(1, (), n + 2), tc.E_hat(1, (), n)), tc.E_hat(2, (), n) * 2)

    rep.run("EE-equals-[2]E2", {"n_max": n_max}, ((n, lambda n=n: ee(n)) for n in range(-n_max, n_max + 1)))


# ---------------------------------------------------------------------------
# graded dimensions


def _partition_series(a: int, d_max: int) -> list[int]:
    """Coefficients of prod_{i=1..a} 1/(1 - q^i) up to q^d_max."""
    series = [1] + [0] * d_max
    for i in range(1, a + 1):
        for d in range(i, d_max + 1):
            series[d] += series[d - i]
    return series


def _rectangle_basis(a: int, d: int) -> list[tuple]:
    """Rectangle products (a_1, l_1) ... with l_1 > ... > l_p >= 0, sum a_i = a, sum a_i l_i = d."""
    out = []

    def rec(left, deg, top, acc):
        if left == 0:
            if deg == 0:
                out.append(tuple(acc))
            return
        for l in range(top, -1, -1):
            for k in range(1, left + 1):
                if k * l <= deg:
                    rec(left - k, deg - k * l, l - 1, acc + [(k, l)])

    rec(a, d, d, [])
    return out


def suite_dims(rep: SuiteReport, a_max=6, d_max=10, n=0, seed=0):
    def case(a):
        series = _partition_series(a, d_max)
        for d in range(d_max + 1):
            counts = {
                "enumerated": tc.plus_dim(a, d),
                "generating-series": series[d],
                "rectangle-basis": len(_rectangle_basis(a, d)),
                "garland-E-words": len(ca._power_parts(a, d)),
                "trace-plus-words": sum(1 for w in tc.enumerate_words(n, n + 2 * a, d) if not w.b and not w.tau),
            }
            if len(set(counts.values())) != 1:
                return False, {"d": d, **counts}
        return True, None

    rep.run("plus-part-dimensions", {"a_max": a_max, "d_max": d_max}, ((a, lambda a=a: case(a)) for a in range(a_max + 1)))

    def negative(a):
        empty = all(not tc.enumerate_words(n, n + 2 * a, d) and tc.graded_dim(n, n + 2 * a, d) == 0 for d in range(-5, 0))
        return empty, "negative-degree words found"

    rep.run("negative-degrees-empty", {"a_max": a_max}, ((a, lambda a=a: negative(a)) for a in range(a_max + 1)))

    def additive(x, y):
        z = tc.compose(x, y)
        want = {min(x.degrees()) + min(y.degrees())}
        return z.is_zero() or z.degrees() == want, {"degrees": sorted(z.degrees()), "expected": sorted(want)}

    samples = []
    for m in range(-2, 3):
        for a in range(2):
            for b in range(2):
                for lam in partitions_up_to(2, a):
                    for mu in partitions_up_to(2, b):
                        samples.append(tc.TraceElement.word(tc.TraceBasisWord(m, b, mu, (), a, lam)))
    samples += [tc.bubble(sf.schur(t), m) for m in range(-2, 3) for t in partitions_up_to(2)]
    pairs = [(x, y) for y in samples for x in samples if x.source == y.target]
    rep.run("composition-respects-degree", {"samples": len(samples)}, ((i, lambda p=p: additive(*p)) for i, p in enumerate(pairs)))


# ---------------------------------------------------------------------------
# presentation and bases


def _closed_form(side, n, a, b, i, j):
    s = 1 if side == "+" else -1
    return s * (i + j) * (n + a - b) + i * i + j * j


def suite_cor34(rep: SuiteReport, delta_max=3, ab_max=4, n_span=4, seed=0):
    cases = []
    for a in range(ab_max + 1):
        for b in range(ab_max + 1):
            for delta in range(-delta_max, delta_max + 1):
                if not list(vpres._thickness_pairs(a, b, delta)):
                    continue  # zero hom space
                for k in range(n_span + 1):
                    cases.append(("+", b - a + k, a, b, delta))
                    cases.append(("-", b - a - k, a, b, delta))
    params = {"delta_max": delta_max, "ab_max": ab_max, "n_span": n_span}

    def case(side, n, a, b, delta):
        fn = vpres.bplus_degree if side == "+" else vpres.bminus_degree
        pairs = list(vpres._thickness_pairs(a, b, delta))
        for i, j in pairs:
            if fn(n, a, b, i, j, 0) != _closed_form(side, n, a, b, i, j):
                return False, {"pair": [i, j], "pieces": fn(n, a, b, i, j, 0)}
        low = min(fn(n, a, b, i, j, 0) for i, j in pairs)
        enum = vpres.enumerate_Bplus if side == "+" else vpres.enumerate_Bminus
        counts = enum(n, a, b, delta, low + 2)
        return vpres.min_degree(counts) == low and low >= delta * delta, {"min_degree": low, "counts": counts}

    rep.run("min-degree-at-least-delta-squared", params, ((c, lambda c=c: case(*c)) for c in cases))

    def identity(side, n, a, b):
        enum = vpres.enumerate_Bplus if side == "+" else vpres.enumerate_Bminus
        counts = enum(n, a, b, 0, 0)
        zeros = vpres.degree_zero_elements(n, a, b, side)
        return counts.get(0) == 1 and zeros == [(0, 0)], {"degree0": counts.get(0), "pairs": zeros}

    rep.run(
        "unique-degree-zero-identity",
        params,
        ((c, lambda c=c: identity(c[0], c[1], c[2], c[3])) for c in cases if c[4] == 0),
    )


def suite_vpres(rep: SuiteReport, ab_max=2, deg_max=8, n_max=3, delta_max=3, words=100, length_max=8, seed=0):
    def counts(n, a, b, delta):
        return _eq(vpres.enumerate_forms(n, a, b, delta, deg_max), vpres.enumerate_Bplus(n, a, b, delta, deg_max))

    cases = [
        (n, a, b, delta)
        for a in range(ab_max + 1)
        for b in range(ab_max + 1)
        for n in range(-n_max, n_max + 1)
        for delta in range(-min(a, b), delta_max + 1)
    ]
    rep.run(
        "normal-forms-match-basis",
        {"ab_max": ab_max, "deg_max": deg_max, "n_max": n_max, "delta_max": delta_max},
        ((c, lambda c=c: counts(*c)) for c in cases),
    )

    rng = random.Random(seed)
    samples = []
    for _ in range(words):
        src = (rng.randint(0, ab_max), rng.randint(0, ab_max))
        w = vpres.random_word(rng, src, rng.randint(1, length_max))
        n = rng.randint(-n_max, n_max)
        samples.append((w, src, n))

    def rewrite(w, src, n):
        m = n + 2 * (src[1] - src[0])
        x = vpres.VElement.word(w, src, n, m)
        left = vpres.normal_form(x, "leftmost")
        right = vpres.normal_form(x, "rightmost")
        if left != right:
            return False, {"leftmost": str(left), "rightmost": str(right)}
        bad = [vpres.format_word(v) for v, _ in left.items() if not vpres.is_normal(v, src, left.N)]
        return not bad, {"not normal": bad}

    rep.run(
        "random-words-strategies-agree",
        {"words": words, "length_max": length_max, "seed": seed},
        (((vpres.format_word(w), src, n), lambda t=(w, src, n): rewrite(*t)) for w, src, n in samples),
    )


# ---------------------------------------------------------------------------
# Hochschild-Mitchell homology


def _posets(k: int):
    """Partial orders on range(k) containing no pair i > j, one per generating set, deduplicated."""
    objs = [f"x{i}" for i in range(k)]
    seen = set()
    pairs = [(objs[i], objs[j]) for i, j in combinations(range(k), 2)]
    for mask in range(1 << len(pairs)):
        rel = [p for t, p in enumerate(pairs) if mask >> t & 1]
        C = hh.poset_category(objs, rel)
        key = frozenset(C.homs)
        if key not in seen:
            seen.add(key)
            yield rel, C


def _dual_with_arrow() -> hh.FinLinCat:
    """End(x) = Z[e]/e^2, End(y) = Z, and f: x -> y with f e = 0."""
    return hh.load_category(
        {
            "objects": ["x", "y"],
            "homs": {
                "x->x": {"rank": 2, "basis": ["1x", "e"]},
                "y->y": {"rank": 1, "basis": ["1y"]},
                "x->y": {"rank": 1, "basis": ["f"]},
            },
            "compose": [
                {"g": "1x", "f": "1x", "result": [{"basis": "1x", "coeff": 1}]},
                {"g": "1x", "f": "e", "result": [{"basis": "e", "coeff": 1}]},
                {"g": "e", "f": "1x", "result": [{"basis": "e", "coeff": 1}]},
                {"g": "e", "f": "e", "result": []},
                {"g": "1y", "f": "1y", "result": [{"basis": "1y", "coeff": 1}]},
                {"g": "f", "f": "1x", "result": [{"basis": "f", "coeff": 1}]},
                {"g": "f", "f": "e", "result": []},
                {"g": "1y", "f": "f", "result": [{"basis": "f", "coeff": 1}]},
            ],
            "identities": {"x": "1x", "y": "1y"},
        }
    )


def suite_hh(rep: SuiteReport, objects_max=4, deg=5, seed=0):
    strong = [(f"poset{len(C.objects)}:{sorted(rel)}", C) for k in range(1, objects_max + 1) for rel, C in _posets(k)]
    strong += [
        ("kronecker", hh.path_category(["x", "y"], [("f", "x", "y"), ("g", "x", "y")])),
        ("double-A3", hh.path_category(["x", "y", "z"], [("f", "x", "y"), ("g", "x", "y"), ("h", "y", "z"), ("k", "y", "z")])),
    ]
    params = {"objects_max": objects_max, "degrees": deg}

    def strong_case(C):
        groups = hh.hh(C, deg)
        ok = groups[0] == hh.HomologyGroup(len(C.objects)) and all(g.is_zero() for g in groups[1:])
        return ok, [str(g) for g in groups]

    rep.run("strongly-triangular-homology", params, ((name, lambda C=C: strong_case(C)) for name, C in strong))

    def dd(C):
        K = hh.bar_complex(C, deg)
        return K.check_dd() is None, K.check_dd()

    others = [("dual-numbers", hh.dual_numbers()), ("dual-with-arrow", _dual_with_arrow())]
    rep.run("boundary-squares-to-zero", params, ((name, lambda C=C: dd(C)) for name, C in strong + others))

    def decomposition(C):
        res = hh.decompose(C, deg)
        return res["holds"], {"whole": [str(g) for g in res["whole"]]}

    tri = strong + [others[1]]
    rep.run("triangular-decomposition", params, ((name, lambda C=C: decomposition(C)) for name, C in tri))

    def strategies(C):
        K = hh.bar_complex(C, deg)
        return _eq(hh.homology(K, deg, "min"), hh.homology(K, deg, "first"))

    rep.run("pivot-strategies-agree", params, ((name, lambda C=C: strategies(C)) for name, C in strong[:8] + others))

    def cross(C):
        return _eq(hh.hh(C, deg), hh.hh_dense(C, deg))

    rep.run("sparse-vs-dense-homology", params, ((name, lambda C=C: cross(C)) for name, C in strong[:8] + others))

    closures = [
        ("closure-of-point", hh.poset_category(["x"], []), deg),
        ("closure-of-A2", hh.poset_category(["x", "y"], [("x", "y")]), min(deg, 4)),
    ]

    def closure(base, d):
        groups = hh.hh(hh.additive_closure(base, 2), d)
        ok = groups[0] == hh.HomologyGroup(len(base.objects)) and all(g.is_zero() for g in groups[1:])
        return ok, [str(g) for g in groups]

    rep.run(
        "additive-closure-homology",
        {"summands_max": 2},
        (((name, d), lambda b=b, d=d: closure(b, d)) for name, b, d in closures),
    )

    def trace_agreement(base):
        big = hh.additive_closure(base, 2)
        T_big, T = hh.trace0(big), hh.trace0(base)
        if not hh.isomorphic(T_big.group, T.group):
            return False, {"closure": str(T_big.group), "base": str(T.group)}

        def tr(element):
            return hh.matrix_trace(T, *hh.blocks_of(big, element, base))

        # the matrix trace is well defined on Tr of the closure
        for X in big.objects:
            for Y in big.objects:
                for f in big.basis(X, Y):
                    for g in big.basis(Y, X):
                        if tr(big.compose(g, f)) != tr(big.compose(f, g)):
                            return False, {"pair": [big.name(g), big.name(f)]}
        # and every class of the closure is the class of its diagonal blocks
        for X in big.objects:
            for m in big.basis(X, X):
                j, i, entry = big.units[m]
                want = T_big.class_of({})
                if i == j:
                    x = entry[0]
                    want = T_big.class_of({(x, x, entry[2]): 1})
                if T_big.class_of({m: 1}) != want:
                    return False, {"morphism": big.name(m)}
        return True, None

    rep.run(
        "trace-of-closure-via-matrix-trace",
        {"summands_max": 2},
        ((name, lambda b=b: trace_agreement(b)) for name, b in [("point", closures[0][1]), ("A2", closures[1][1]), ("dual", hh.dual_numbers())]),
    )


SUITES: dict[str, Callable] = {
    "sym": suite_sym,
    "blm": suite_blm,
    "bubbles": suite_bubbles,
    "current": suite_current,
    "zzz": suite_zzz,
    "ja": suite_ja,
    "r7": suite_r7,
    "ap2": suite_ap2,
    "qqq": suite_qqq,
    "k0": suite_k0,
    "dims": suite_dims,
    "cor34": suite_cor34,
    "vpres": suite_vpres,
    "hh": suite_hh,
}


SIGNED_BOUNDS = {"n"}  # a weight, not a size


def default_bounds(name: str) -> dict[str, int]:
    params = inspect.signature(SUITES[name]).parameters
    return {p: v.default for p, v in params.items() if p not in ("rep", "seed")}


def bound_names(name: str) -> list[str]:
    return list(default_bounds(name))


def run_suite(name: str, seed: int = 0, **bounds) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    allowed = set(bound_names(name))
    unknown = set(bounds) - allowed
    if unknown:
        raise ValueError(f"suite {name} has no bounds {sorted(unknown)}; allowed: {sorted(allowed)}")
    for k, v in bounds.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"bound {k} must be an integer, got {v!r}")
        if v < 0 and k not in SIGNED_BOUNDS:
            raise ValueError(f"bound {k} must be nonnegative, got {v}")
    rep = SuiteReport(name, {**default_bounds(name), **bounds, "seed": seed})
    start = time.perf_counter()
    SUITES[name](rep, seed=seed, **bounds)
    rep.elapsed = time.perf_counter() - start
    return rep
