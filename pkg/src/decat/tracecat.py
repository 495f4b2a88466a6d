"""The trace of the categorified quantum sl2 and its triangular basis.

Basis words are F^(b)_mu b+(tau) E^(a)_lam 1_n with lam in P(a), mu in P(b)
and tau any partition; the target weight is n + 2(a - b) and the degree is
2(|lam| + |mu| + |tau|).

The plus part composes by the wedge formula

    E^(a)_x E^(b)_y 1_n = sum_{tau in P(a,b)} (-1)^|hat tau| E^(a+b)(wedge_{a,b}(x s_tau, s_hat_tau y)) 1_n

and the minus part by the same formula with F in place of E.  Full
composition is transported from the current algebra along the dictionary

    E^(a)_{l^a} <-> E_l^(a),  F^(b)_{l^b} <-> F_l^(b),  b-(x) <-> phi(x),

where b- = b+ o S, so b+(tau) corresponds to (-1)^|tau| phi(s_{tau^t}).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import currentalg as ca
from . import symfunc as sf
from .currentalg import GarlandElement, GarlandWord
from .partitions import (
    Partition,
    box_duals,
    conjugate,
    count_partitions,
    pad,
    partition,
    partitions_in_box,
    partitions_of,
    rows_as_rectangles,
    trim,
)
from .symfunc import SymElement

# ---------------------------------------------------------------------------
# Plus part


@dataclass(frozen=True)
class PlusElement:
    """E^(a)(x) 1_n for x in Sym_a: a combination of the basis E^(a)_lam 1_n."""

    n: int
    a: int
    x: SymElement

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("thickness must be nonnegative")
        if any(len(lam) > self.a for lam in self.x.support()):
            raise ValueError(f"{self.x} is not in Sym_{self.a}")
        object.__setattr__(self, "x", sf.truncate(self.x, self.a))

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.n + 2 * self.a

    def coeff(self, lam: Iterable[int]) -> int:
        return self.x.coeff(lam)

    def __eq__(self, other):
        if not isinstance(other, PlusElement):
            return NotImplemented
        return (self.n, self.a, self.x) == (other.n, other.a, other.x)

    def __hash__(self):
        return hash((self.n, self.a, self.x))


def plus_basis(a: int, lam: Iterable[int], n: int) -> PlusElement:
    return PlusElement(n, a, sf.schur(lam, a))


def rectangle(a: int, l: int, n: int) -> PlusElement:
    """E^(a)_{l^a} 1_n."""
    return plus_basis(a, (l,) * a, n)


def compose_plus_sym(a: int, x: SymElement, b: int, y: SymElement) -> SymElement:
    """The Sym_{a+b} label of E^(a)_x E^(b)_y."""
    acc = sf.zero(a + b)
    for tau in partitions_in_box(a, b):
        hat = box_duals(tau, a, b)[2]
        u = sf.truncate(sf.mul(x, sf.schur(tau)), a)
        v = sf.truncate(sf.mul(sf.schur(hat), y), b)
        w = sf.wedge(a, b, u, v)
        acc = acc + (w if sum(hat) % 2 == 0 else -w)
    return acc


def compose_plus(x: PlusElement, y: PlusElement) -> PlusElement:
    """x o y with y acting first."""
    if x.source != y.target:
        raise ValueError(f"weight mismatch: target {y.target} of right factor != source {x.source}")
    return PlusElement(y.n, x.a + y.a, compose_plus_sym(x.a, x.x, y.a, y.x))


# ---------------------------------------------------------------------------
# Rectangle products


def rect_sequence(lam: Iterable[int], a: int) -> tuple[tuple[int, int], ...]:
    """Rows of lam padded to length a as (thickness, value) rectangles, values decreasing."""
    return tuple((k, v) for v, k in rows_as_rectangles(pad(partition(lam), a)))


def rect_partition(rects: Iterable[tuple[int, int]]) -> Partition:
    """Inverse of rect_sequence: (thickness, value) pairs with distinct values -> partition."""
    rects = list(rects)
    values = [v for _, v in rects]
    if len(set(values)) != len(values) or any(k < 1 or v < 0 for k, v in rects):
        raise ValueError(f"malformed rectangle sequence {rects}")
    parts: list[int] = []
    for k, v in sorted(rects, key=lambda r: -r[1]):
        parts += [v] * k
    return trim(parts)


@lru_cache(maxsize=None)
def _recompose(rects: tuple[tuple[int, int], ...]) -> SymElement:
    a = 0
    acc = sf.one(0)
    for k, v in reversed(rects):
        acc = compose_plus_sym(k, sf.schur((v,) * k, k), a, acc)
        a += k
    return acc


def rect_recompose(rects: Iterable[tuple[int, int]], n: int) -> PlusElement:
    """E^(a_1)_{l_1^a_1} ... E^(a_p)_{l_p^a_p} 1_n in the E^(a)_lam basis.

    ``rects`` lists (a_i, l_i) left to right; the rightmost acts first.
    """
    rects = tuple((int(k), int(v)) for k, v in rects)
    if any(k < 0 or v < 0 for k, v in rects):
        raise ValueError(f"malformed rectangle sequence {rects}")
    rects = tuple(r for r in rects if r[0])
    return PlusElement(n, sum(k for k, _ in rects), _recompose(rects))


@lru_cache(maxsize=None)
def _decompose(a: int, lam: Partition) -> tuple[tuple[Partition, int], ...]:
    lead = _recompose(rect_sequence(lam, a))
    if lead.coeff(lam) != 1:
        raise ArithmeticError(f"rectangle product for {lam} has leading coefficient {lead.coeff(lam)}")
    out: dict[Partition, int] = {lam: 1}
    for mu, c in lead.items():
        if mu == lam:
            continue
        if mu > lam:
            raise ArithmeticError(f"rectangle product for {lam} contains the larger partition {mu}")
        for nu, d in _decompose(a, mu):
            out[nu] = out.get(nu, 0) - c * d
    return tuple(sorted((k, v) for k, v in out.items() if v))


def rect_decompose(a: int, lam: Iterable[int]) -> dict[Partition, int]:
    """E^(a)_lam as an integer combination of rectangle products.

    Keys are partitions nu in P(a) standing for the product rect_sequence(nu).
    """
    lam = partition(lam)
    if len(lam) > a:
        raise ValueError(f"{lam} has more than {a} parts")
    return dict(_decompose(a, lam))


# ---------------------------------------------------------------------------
# Triangular basis and elements


@dataclass(frozen=True, order=True)
class TraceBasisWord:
    n: int
    b: int
    mu: Partition
    tau: Partition
    a: int
    lam: Partition

    def __post_init__(self):
        for name in ("mu", "tau", "lam"):
            object.__setattr__(self, name, partition(getattr(self, name)))
        if self.a < 0 or self.b < 0:
            raise ValueError("thickness must be nonnegative")
        if len(self.lam) > self.a or len(self.mu) > self.b:
            raise ValueError(f"partition too long for thickness in {self}")

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.n + 2 * (self.a - self.b)

    @property
    def degree(self) -> int:
        return 2 * (sum(self.lam) + sum(self.mu) + sum(self.tau))

    def __str__(self):
        parts = []
        if self.b:
            parts.append(f"F^({self.b})_{list(self.mu)}")
        if self.tau:
            parts.append(f"b+{list(self.tau)}")
        if self.a:
            parts.append(f"E^({self.a})_{list(self.lam)}")
        return " ".join(parts + [f"1_{self.n}"])

    def to_json(self) -> dict:
        return {"n": self.n, "b": self.b, "mu": list(self.mu), "tau": list(self.tau), "a": self.a, "lam": list(self.lam)}

    @classmethod
    def from_json(cls, d: Mapping) -> "TraceBasisWord":
        return cls(int(d["n"]), int(d["b"]), tuple(d["mu"]), tuple(d["tau"]), int(d["a"]), tuple(d["lam"]))


class TraceElement:
    __slots__ = ("_c", "source", "target")

    def __init__(self, coeffs: Mapping[TraceBasisWord, int], source: int, target: int):
        c: dict[TraceBasisWord, int] = {}
        for w, v in coeffs.items():
            if (w.source, w.target) != (source, target):
                raise ValueError(f"{w} does not lie in Tr(n={source}, m={target})")
            if v:
                c[w] = c.get(w, 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}
        self.source = source
        self.target = target

    @classmethod
    def word(cls, w: TraceBasisWord, coeff: int = 1) -> "TraceElement":
        return cls({w: coeff}, w.source, w.target)

    @classmethod
    def idempotent(cls, n: int) -> "TraceElement":
        return cls.word(TraceBasisWord(n, 0, (), (), 0, ()))

    @classmethod
    def zero(cls, source: int, target: int) -> "TraceElement":
        return cls({}, source, target)

    def items(self):
        return self._c.items()

    def coeff(self, w: TraceBasisWord) -> int:
        return self._c.get(w, 0)

    def support(self) -> list[TraceBasisWord]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degrees(self) -> set[int]:
        return {w.degree for w in self._c}

    def __eq__(self, other):
        if not isinstance(other, TraceElement):
            return NotImplemented
        return (self.source, self.target, self._c) == (other.source, other.target, other._c)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self._c.items())))

    def __add__(self, other: "TraceElement") -> "TraceElement":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("weight mismatch in sum")
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return TraceElement(c, self.source, self.target)

    def __neg__(self):
        return TraceElement({k: -v for k, v in self._c.items()}, self.source, self.target)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TraceElement({k: v * other for k, v in self._c.items()}, self.source, self.target)
        return compose(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*[{w}]" for w, v in sorted(self._c.items()))

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "terms": [{"word": w.to_json(), "coeff": str(v)} for w, v in sorted(self._c.items())],
        }

    @classmethod
    def from_json(cls, d: Mapping) -> "TraceElement":
        terms = {TraceBasisWord.from_json(t["word"]): int(t["coeff"]) for t in d["terms"]}
        return cls(terms, int(d["source"]), int(d["target"]))


def E_hat(a: int, lam: Iterable[int], n: int) -> TraceElement:
    return TraceElement.word(TraceBasisWord(n, 0, (), (), a, tuple(lam)))


def F_hat(b: int, mu: Iterable[int], n: int) -> TraceElement:
    return TraceElement.word(TraceBasisWord(n, b, tuple(mu), (), 0, ()))


def bubble(x: SymElement, n: int) -> TraceElement:
    """b+(x) 1_n."""
    return TraceElement({TraceBasisWord(n, 0, (), tau, 0, ()): v for tau, v in x.items()}, n, n)


def bubble_minus(x: SymElement, n: int) -> TraceElement:
    """b-(x) 1_n = b+(S x) 1_n."""
    return bubble(sf.antipode(x), n)


def from_plus(x: PlusElement) -> TraceElement:
    return TraceElement({TraceBasisWord(x.n, 0, (), (), x.a, lam): v for lam, v in x.x.items()}, x.source, x.target)


def from_minus(b: int, x: SymElement, n: int) -> TraceElement:
    """F^(b)(x) 1_n for x in Sym_b."""
    return TraceElement({TraceBasisWord(n, b, mu, (), 0, ()): v for mu, v in x.items()}, n, n - 2 * b)


def rect_recompose_minus(rects: Iterable[tuple[int, int]], n: int) -> TraceElement:
    """F^(b_1)_{l_1^b_1} ... F^(b_p)_{l_p^b_p} 1_n by the mirrored composition rule."""
    rects = tuple((int(k), int(v)) for k, v in rects if k)
    return from_minus(sum(k for k, _ in rects), _recompose(rects), n)


# ---------------------------------------------------------------------------
# Transport to and from the current algebra


def _runs_part(nu: Partition, a: int) -> tuple[tuple[int, int], ...]:
    """Garland divided-power part (index, power) of the rectangle product for nu."""
    return tuple((v, k) for k, v in rect_sequence(nu, a))


def _part_partition(part: Iterable[tuple[int, int]]) -> tuple[int, Partition]:
    part = list(part)
    return sum(k for _, k in part), rect_partition((k, v) for v, k in part)


def to_current(x: TraceElement) -> GarlandElement:
    acc: dict[GarlandWord, int] = {}
    for w, v in x.items():
        fexp = rect_decompose(w.b, w.mu)
        eexp = rect_decompose(w.a, w.lam)
        tsign = -1 if sum(w.tau) % 2 else 1
        tau = conjugate(w.tau)
        for nu_f, cf in fexp.items():
            fpart = _runs_part(nu_f, w.b)
            for nu_e, ce in eexp.items():
                gw = GarlandWord(w.n, fpart, tau, _runs_part(nu_e, w.a))
                acc[gw] = acc.get(gw, 0) + v * cf * ce * tsign
    return GarlandElement(acc, x.source, x.target)


def from_current(y: GarlandElement) -> TraceElement:
    acc: dict[TraceBasisWord, int] = {}
    for w, v in y.items():
        b, nu_f = _part_partition(w.F)
        a, nu_e = _part_partition(w.E)
        fexp = _recompose(rect_sequence(nu_f, b))
        eexp = _recompose(rect_sequence(nu_e, a))
        tsign = -1 if sum(w.tau) % 2 else 1
        tau = conjugate(w.tau)
        for mu, cf in fexp.items():
            for lam, ce in eexp.items():
                tw = TraceBasisWord(w.n, b, mu, tau, a, lam)
                acc[tw] = acc.get(tw, 0) + v * cf * ce * tsign
    return TraceElement(acc, y.source, y.target)


def compose(x: TraceElement, y: TraceElement) -> TraceElement:
    """x o y (y acts first), transported through the current algebra."""
    if y.target != x.source:
        raise ValueError(f"weight mismatch: target {y.target} of right factor != source {x.source}")
    return from_current(ca.mul(to_current(x), to_current(y)))


# ---------------------------------------------------------------------------
# Enumeration and graded dimensions


def _thickness_range(n: int, m: int, extra: int) -> range:
    if (m - n) % 2:
        raise ValueError("source and target weights must have the same parity")
    if extra < 0:
        raise ValueError("extra thickness must be nonnegative")
    k = (m - n) // 2
    lo = max(0, -k)
    return range(lo, lo + extra + 1)


def enumerate_words(n: int, m: int, d: int, extra: int = 0) -> list[TraceBasisWord]:
    """Basis words of Tr(n, m) of degree exactly 2d.

    Every hom space has the degree-zero words F^(b) E^(b+k) for all b, so the
    F-thickness b ranges over max(0, -k) .. max(0, -k) + extra, k = (m - n) / 2.
    """
    if d < 0:
        return []
    k = (m - n) // 2
    out = []
    for b in _thickness_range(n, m, extra):
        a = b + k
        for dl in range(d + 1):
            for dm in range(d - dl + 1):
                for lam in partitions_of(dl, None, a):
                    for mu in partitions_of(dm, None, b):
                        for tau in partitions_of(d - dl - dm):
                            out.append(TraceBasisWord(n, b, mu, tau, a, lam))
    return sorted(out)


def graded_dim(n: int, m: int, d: int, extra: int = 0) -> int:
    """Number of basis words of degree 2d in Tr(n, m) at the bounded thicknesses."""
    if d < 0:
        return 0
    k = (m - n) // 2
    total = 0
    for b in _thickness_range(n, m, extra):
        a = b + k
        for dl in range(d + 1):
            for dm in range(d - dl + 1):
                total += count_partitions(dl, a) * count_partitions(dm, b) * count_partitions(d - dl - dm)
    return total


def plus_dim(a: int, d: int) -> int:
    """Dimension of the degree-2d part of Tr^+(n, n + 2a), by enumeration of P(a)."""
    if d < 0:
        return 0
    return sum(1 for _ in partitions_of(d, None, a))


# ---------------------------------------------------------------------------
# E-before-F basis


def ef_product(w: TraceBasisWord) -> TraceElement:
    """E^(a)_lam b+(tau) F^(b)_mu 1_n, the E-first word with the labels of w."""
    f = F_hat(w.b, w.mu, w.n)
    return compose(E_hat(w.a, w.lam, f.target), compose(bubble(sf.schur(w.tau), f.target), f))


def from_ef_basis(coords: Mapping[TraceBasisWord, int], source: int, target: int) -> TraceElement:
    acc = TraceElement.zero(source, target)
    for w, c in coords.items():
        acc = acc + ef_product(w) * c
    return acc


def _solve_exact(M: list[list[int]], rhs: list[int]) -> list[int]:
    """Solve M v = rhs for square invertible M over Q and insist on an integer answer."""
    size = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(size):
        piv = next((r for r in range(col, size) if A[r][col]), None)
        if piv is None:
            raise ArithmeticError("E-first products are linearly dependent in this block")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [v / p for v in A[col]]
        for r in range(size):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    out = []
    for row in A:
        if row[-1].denominator != 1:
            raise ArithmeticError(f"non-integral coordinate {row[-1]} in the E-first basis")
        out.append(int(row[-1]))
    return out


def to_ef_basis(x: TraceElement) -> dict[TraceBasisWord, int]:
    """Coordinates of x in the E-first basis, keyed by the labels passed to ef_product.

    Degree by degree, the storage words up to the largest F-thickness in x are
    spanned integrally by the E-first products with the same labels.
    """
    lo = max(0, (x.source - x.target) // 2)
    extra = max((w.b for w in x.support()), default=lo) - lo
    blocks: dict[int, dict[TraceBasisWord, int]] = {}
    for w, c in x.items():
        blocks.setdefault(w.degree // 2, {})[w] = c
    out: dict[TraceBasisWord, int] = {}
    for d, part in sorted(blocks.items()):
        words = enumerate_words(x.source, x.target, d, extra)
        index = {w: i for i, w in enumerate(words)}
        M = [[0] * len(words) for _ in words]
        for j, w in enumerate(words):
            for u, c in ef_product(w).items():
                if u not in index:
                    raise ArithmeticError(f"E-first product of {w} leaves the degree-{2 * d} block")
                M[index[u]][j] = c
        sol = _solve_exact(M, [part.get(w, 0) for w in words])
        out.update({w: v for w, v in zip(words, sol) if v})
    return out


# ---------------------------------------------------------------------------
# Degree-zero dictionary with the canonical basis


def from_canonical(shape: str, a: int, b: int, n: int) -> TraceElement:
    """Image of a canonical word: F^(b)E^(a)1_n -> F^(b) E^(a) 1_n, E^(a)F^(b)1_n -> E^(a) o F^(b)."""
    if shape == "FE":
        return TraceElement.word(TraceBasisWord(n, b, (), (), a, ()))
    if shape == "EF":
        return compose(E_hat(a, (), n - 2 * b), F_hat(b, (), n))
    raise ValueError(f"unknown shape {shape!r}")


_FACTOR = re.compile(r"\s*(E|F|B-|B)(\d*)\[([\d,\s]*)\]\s*")


def parse_word(text: str, n: int) -> TraceElement:
    """Evaluate a product like ``"E1[2] B[1] F2[1,1]"`` on 1_n.

    ``Ea[lam]`` is E^(a)_lam, ``Fb[mu]`` is F^(b)_mu, ``B[tau]`` is b+(s_tau)
    and ``B-[tau]`` is b-(s_tau).  The rightmost factor acts first.
    """
    text = text.strip()
    pos, factors = 0, []
    while pos < len(text):
        m = _FACTOR.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse factor at {text[pos:]!r}")
        kind, k, body = m.group(1), m.group(2), m.group(3).strip()
        parts = tuple(int(x) for x in body.split(",") if x.strip()) if body else ()
        if kind in ("E", "F") and not k:
            raise ValueError(f"{kind} needs a thickness, as in {kind}1[]")
        if kind.startswith("B") and k:
            raise ValueError("bubbles take no thickness")
        factors.append((kind, int(k) if k else 0, parts))
        pos = m.end()
    acc = TraceElement.idempotent(n)
    for kind, k, parts in reversed(factors):
        w = acc.target
        if kind == "E":
            g = E_hat(k, parts, w)
        elif kind == "F":
            g = F_hat(k, parts, w)
        elif kind == "B":
            g = bubble(sf.schur(parts), w)
        else:
            g = bubble_minus(sf.schur(parts), w)
        acc = compose(g, acc)
    return acc


def dumps(x: TraceElement) -> str:
    return json.dumps(x.to_json(), sort_keys=True)
