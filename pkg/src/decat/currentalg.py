"""Idempotented integral current algebra of sl2 in the Garland basis.

Products are computed over the rationals in PBW order F < H < E, with H_0
replaced by the weight at its position.  The result is then rewritten in the
integral basis

    1_m F_{i_1}^(a_1) ... F_{i_r}^(a_r) phi(s_tau) E_{k_1}^(c_1) ... E_{k_t}^(c_t) 1_n

and integrality of every coefficient is asserted.  Weights: E raises by 2,
so m = n + 2(sum c - sum a).  phi is the ring map Sym -> U^0 with
phi(p_j) = H_j.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm
from typing import Iterable, Mapping

from . import symfunc as sf
from .partitions import Partition, partition, partitions_of, trim
from .symfunc import SymElement

# A rational PBW monomial on 1_n: sorted tuples of loop indices of the F's,
# of the H's (index >= 1; H_0 never survives) and of the E's.
Mono = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
Terms = dict[Mono, Fraction]

_ID: Mono = ((), (), ())


def _ins(t: tuple[int, ...], i: int) -> tuple[int, ...]:
    return tuple(sorted(t + (i,)))


def _weight_at(mono: Mono, n: int) -> int:
    """Target weight of the monomial acting on 1_n."""
    fs, _, es = mono
    return n + 2 * (len(es) - len(fs))


@lru_cache(maxsize=None)
def left_mul(gen: tuple[str, int], mono: Mono, n: int) -> tuple[tuple[Mono, int], ...]:
    """PBW expansion of gen * mono * 1_n, with gen one of ("E", i), ("F", i), ("H", i).

    The relations are integral, so the coefficients are plain ints.
    """
    kind, i = gen
    fs, hs, es = mono
    if kind == "F":
        return (((_ins(fs, i), hs, es), 1),)
    if kind == "H":
        if i == 0:
            w = _weight_at(mono, n)
            return ((mono, w),) if w else ()
        if not fs:
            return (((fs, _ins(hs, i), es), 1),)
        # H_i F_j R = F_j (H_i R) - 2 F_{i+j} R
        j, rest = fs[0], (fs[1:], hs, es)
        acc: Terms = {}
        for m, c in left_mul(("H", i), rest, n):
            _add(acc, (_ins(m[0], j), m[1], m[2]), c)
        _add(acc, (_ins(rest[0], i + j), hs, es), -2)
        return _freeze(acc)
    if kind != "E":
        raise ValueError(f"unknown generator {gen!r}")
    if fs:
        # E_i F_j R = F_j (E_i R) + H_{i+j} R
        j, rest = fs[0], (fs[1:], hs, es)
        acc = {}
        for m, c in left_mul(("E", i), rest, n):
            _add(acc, (_ins(m[0], j), m[1], m[2]), c)
        for m, c in left_mul(("H", i + j), rest, n):
            _add(acc, m, c)
        return _freeze(acc)
    if hs:
        # E_i H_l R = H_l (E_i R) - 2 E_{i+l} R
        l, rest = hs[0], ((), hs[1:], es)
        acc = {}
        for m, c in left_mul(("E", i), rest, n):
            for m2, c2 in left_mul(("H", l), m, n):
                _add(acc, m2, c * c2)
        for m, c in left_mul(("E", i + l), rest, n):
            _add(acc, m, -2 * c)
        return _freeze(acc)
    return (((fs, hs, _ins(es, i)), 1),)


def _add(acc: dict, k, v):
    if v:
        s = acc.get(k, 0) + v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


def _freeze(acc: Terms) -> tuple[tuple[Mono, Fraction], ...]:
    return tuple(sorted(acc.items()))


def act(gens: Iterable[tuple[str, int]], terms: Mapping[Mono, Fraction], n: int) -> Terms:
    """Left-multiply a rational combination of monomials by a word of generators.

    ``gens`` is read left to right, so its last letter acts first.
    """
    cur: Terms = dict(terms)
    for g in reversed(list(gens)):
        nxt: Terms = {}
        for m, c in cur.items():
            for m2, c2 in left_mul(g, m, n):
                _add(nxt, m2, c * c2)
        cur = nxt
    return cur


# ---------------------------------------------------------------------------
# Garland words


@dataclass(frozen=True, order=True)
class GarlandWord:
    n: int
    F: tuple[tuple[int, int], ...]
    tau: Partition
    E: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for name, part in (("F", self.F), ("E", self.E)):
            idx = [i for i, _ in part]
            if any(i < 0 for i in idx) or any(a < 1 for _, a in part):
                raise ValueError(f"bad {name}-part {part}")
            if any(idx[k] <= idx[k + 1] for k in range(len(idx) - 1)):
                raise ValueError(f"{name}-part loop indices must strictly decrease: {part}")
        object.__setattr__(self, "tau", partition(self.tau))

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.n + 2 * (sum(c for _, c in self.E) - sum(a for _, a in self.F))

    @property
    def loop_degree(self) -> int:
        return sum(i * a for i, a in self.F) + sum(self.tau) + sum(k * c for k, c in self.E)

    def __str__(self):
        parts = [f"F{i}^({a})" for i, a in self.F]
        if self.tau:
            parts.append("phi(s[" + ",".join(map(str, self.tau)) + "])")
        parts += [f"E{k}^({c})" for k, c in self.E]
        return " ".join(parts + [f"1_{self.n}"])

    def to_json(self) -> dict:
        return {"n": self.n, "F": [list(x) for x in self.F], "tau": list(self.tau), "E": [list(x) for x in self.E]}

    @classmethod
    def from_json(cls, d: Mapping) -> "GarlandWord":
        return cls(int(d["n"]), tuple(tuple(x) for x in d.get("F", [])), tuple(d.get("tau", [])),
                   tuple(tuple(x) for x in d.get("E", [])))


def identity_word(n: int) -> GarlandWord:
    return GarlandWord(n, (), (), ())


def _powers(part: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Merge (index, power) pairs and sort by decreasing index."""
    c = Counter()
    for i, a in part:
        c[i] += a
    return tuple(sorted(((i, a) for i, a in c.items() if a), reverse=True))


class GarlandElement:
    """Integer combination of Garland words with fixed source and target."""

    __slots__ = ("_c", "source", "target")

    def __init__(self, coeffs: Mapping[GarlandWord, int], source: int, target: int):
        c: dict[GarlandWord, int] = {}
        for w, v in coeffs.items():
            if (w.source, w.target) != (source, target):
                raise ValueError(f"{w} is not in 1_{target} U 1_{source}")
            if v:
                c[w] = c.get(w, 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}
        self.source = source
        self.target = target

    @classmethod
    def word(cls, w: GarlandWord, coeff: int = 1) -> "GarlandElement":
        return cls({w: coeff}, w.source, w.target)

    @classmethod
    def idempotent(cls, n: int) -> "GarlandElement":
        return cls.word(identity_word(n))

    @classmethod
    def zero(cls, source: int, target: int) -> "GarlandElement":
        return cls({}, source, target)

    def items(self):
        return self._c.items()

    def coeff(self, w: GarlandWord) -> int:
        return self._c.get(w, 0)

    def support(self) -> list[GarlandWord]:
        return sorted(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if not isinstance(other, GarlandElement):
            return NotImplemented
        return (self.source, self.target, self._c) == (other.source, other.target, other._c)

    def __hash__(self):
        return hash((self.source, self.target, frozenset(self._c.items())))

    def _check(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("weight mismatch in sum")

    def __add__(self, other: "GarlandElement") -> "GarlandElement":
        self._check(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return GarlandElement(c, self.source, self.target)

    def __neg__(self):
        return GarlandElement({k: -v for k, v in self._c.items()}, self.source, self.target)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GarlandElement({k: v * other for k, v in self._c.items()}, self.source, self.target)
        return mul(self, other)

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
    def from_json(cls, d: Mapping) -> "GarlandElement":
        terms = {GarlandWord.from_json(t["word"]): int(t["coeff"]) for t in d["terms"]}
        return cls(terms, int(d["source"]), int(d["target"]))


# ---------------------------------------------------------------------------
# phi and the passage between Garland words and rational PBW monomials


def phi(x: SymElement) -> dict[Partition, Fraction]:
    """H-block coordinates of phi(x): {rho: c} meaning sum c * H_rho1 H_rho2 ..."""
    out: dict[Partition, Fraction] = {}
    for tau, v in x.items():
        for rho, c in sf.schur_to_power_sums(tau).items():
            _add(out, rho, c * v)
    return out


def phi_inv(hblock: Mapping[Iterable[int], Fraction | int]) -> SymElement:
    """Inverse of phi: H_rho -> p_rho.  Raises if the result is not integral."""
    acc: dict[Partition, Fraction] = {}
    for rho, c in hblock.items():
        rho = trim(sorted((int(r) for r in rho), reverse=True))
        if any(r <= 0 for r in rho):
            raise ValueError("H_0 is not part of the H-block")
        for tau, v in sf.power_sums_to_schur(rho).items():
            _add(acc, tau, Fraction(c) * v)
    return SymElement(_integral(acc, "phi_inv"))


@lru_cache(maxsize=None)
def H_jb(j: int, b: int) -> tuple[tuple[Partition, Fraction], ...]:
    """H_{j,b} in H-block coordinates via b H_{j,b} = sum (-1)^(l-1) H_{j,b-l} H_{lj}."""
    if b == 0:
        return (((), Fraction(1)),)
    if j == 0:
        raise ValueError("H_{0,b} depends on the weight and has no H-block form")
    acc: dict[Partition, Fraction] = {}
    for l in range(1, b + 1):
        for rho, c in H_jb(j, b - l):
            key = tuple(sorted(rho + (l * j,), reverse=True))
            _add(acc, key, c * (-1) ** (l - 1) / b)
    return tuple(sorted(acc.items()))


def _integral(acc: Mapping, what: str) -> dict:
    out = {}
    for k, v in acc.items():
        if Fraction(v).denominator != 1:
            raise ArithmeticError(f"{what}: coefficient {v} of {k} is not an integer")
        if v:
            out[k] = int(v)
    return out


def _expand_power_part(part: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], Fraction]:
    idx: list[int] = []
    scale = Fraction(1)
    for i, a in part:
        idx += [i] * a
        scale /= factorial(a)
    return tuple(sorted(idx)), scale


@lru_cache(maxsize=None)
def _word_pbw(w: GarlandWord) -> tuple[tuple[Mono, Fraction], ...]:
    fs, cf = _expand_power_part(w.F)
    es, ce = _expand_power_part(w.E)
    out: Terms = {}
    for rho, c in _schur_to_p(w.tau):
        _add(out, (fs, tuple(sorted(rho)), es), c * cf * ce)
    return tuple(out.items())


def word_to_pbw(w: GarlandWord) -> Terms:
    return dict(_word_pbw(w))


def element_to_pbw(x: GarlandElement) -> Terms:
    out: Terms = {}
    for w, v in x.items():
        for m, c in _word_pbw(w):
            _add(out, m, c * v)
    return out


@lru_cache(maxsize=None)
def _schur_to_p(tau: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    return tuple(sf.schur_to_power_sums(tau).items())


@lru_cache(maxsize=None)
def _p_to_schur(rho: Partition) -> tuple[tuple[Partition, int], ...]:
    return tuple(sf.power_sums_to_schur(rho).items())


def _divided(idx: tuple[int, ...]) -> tuple[tuple[tuple[int, int], ...], int]:
    cnt = Counter(idx)
    scale = 1
    for a in cnt.values():
        scale *= factorial(a)
    return tuple(sorted(cnt.items(), reverse=True)), scale


@lru_cache(maxsize=None)
def _mono_garland(mono: Mono, n: int) -> tuple[tuple[GarlandWord, int], ...]:
    fs, hs, es = mono
    fpart, fscale = _divided(fs)
    epart, escale = _divided(es)
    rho = tuple(sorted(hs, reverse=True))
    return tuple((GarlandWord(n, fpart, tau, epart), fscale * escale * v) for tau, v in _p_to_schur(rho))


def _common_denominator(values: Iterable) -> int:
    d = 1
    for v in values:
        d = lcm(d, Fraction(v).denominator)
    return d


def _scaled(terms: Mapping, d: int) -> dict:
    return {k: int(v * d) for k, v in terms.items()}


def pbw_to_garland(terms: Mapping[Mono, Fraction], n: int) -> GarlandElement:
    """Rewrite a rational PBW combination on 1_n in the Garland basis; asserts integrality."""
    d = _common_denominator(terms.values())
    return _int_pbw_to_garland(_scaled(terms, d), d, n)


def _int_pbw_to_garland(terms: Mapping[Mono, int], d: int, n: int) -> GarlandElement:
    """Same, for the combination terms / d with integer numerators."""
    targets = {n + 2 * (len(es) - len(fs)) for fs, _, es in terms}
    if len(targets) != 1:
        raise ValueError(f"cannot assign a single target weight to these terms: {sorted(targets)}")
    acc: dict[GarlandWord, int] = {}
    for mono, c in terms.items():
        for w, v in _mono_garland(mono, n):
            _add(acc, w, c * v)
    out = {}
    for w, v in acc.items():
        q, r = divmod(v, d)
        if r:
            raise ArithmeticError(f"Garland basis: coefficient {Fraction(v, d)} of {w} is not an integer")
        out[w] = q
    return GarlandElement(out, n, targets.pop())


# ---------------------------------------------------------------------------
# Multiplication


@lru_cache(maxsize=None)
def _word_generators(w: GarlandWord) -> list[tuple[tuple[tuple[str, int], ...], Fraction]]:
    """The Garland word as a rational combination of generator words."""
    fs, cf = _expand_power_part(w.F)
    es, ce = _expand_power_part(w.E)
    out = []
    for rho, c in _schur_to_p(w.tau):
        gens = tuple(("F", i) for i in fs) + tuple(("H", r) for r in rho) + tuple(("E", k) for k in es)
        out.append((gens, c * cf * ce))
    return out


@lru_cache(maxsize=4096)
def _int_pbw(y: GarlandElement) -> tuple[dict[Mono, int], int]:
    ypbw = element_to_pbw(y)
    d = _common_denominator(ypbw.values())
    return _scaled(ypbw, d), d


def mul(x: GarlandElement, y: GarlandElement) -> GarlandElement:
    """x * y, where y acts first; requires target(y) == source(x)."""
    if y.target != x.source:
        raise ValueError(f"weight mismatch: target {y.target} of right factor != source {x.source}")
    yint, dy = _int_pbw(y)
    xgens = [(gens, c * v) for w, v in x.items() for gens, c in _word_generators(w)]
    dx = _common_denominator(c for _, c in xgens)
    acc: dict[Mono, int] = {}
    for gens, c in xgens:
        k = int(c * dx)
        for m, c2 in act(gens, yint, y.source).items():
            _add(acc, m, c2 * k)
    if not acc:
        return GarlandElement.zero(y.source, x.target)
    return _int_pbw_to_garland(acc, dx * dy, y.source)


def generator(kind: str, i: int, a: int, n: int) -> GarlandElement:
    """E_i^(a) 1_n or F_i^(a) 1_n (a >= 0) as a Garland element."""
    if a == 0:
        return GarlandElement.idempotent(n)
    if kind == "E":
        return GarlandElement.word(GarlandWord(n, (), (), ((i, a),)))
    if kind == "F":
        return GarlandElement.word(GarlandWord(n, ((i, a),), (), ()))
    raise ValueError(f"unknown generator kind {kind!r}")


def phi_element(x: SymElement, n: int) -> GarlandElement:
    """phi(x) 1_n in the Garland basis."""
    return GarlandElement({GarlandWord(n, (), tau, ()): v for tau, v in x.items()}, n, n)


# ---------------------------------------------------------------------------
# Normal form of generator words

_GEN = re.compile(r"\s*(?:([EFH])(\d+)(?:\^\((\d+)\)|\^(\d+))?|S\[([\d,\s]*)\])\s*\*?")


def parse_word(text: str) -> list[tuple]:
    """Parse e.g. ``"E0 F1^2 H1 E0^(2) S[2,1]"``; S[tau] stands for phi(s_tau)."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _GEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse generator word at {text[pos:]!r}")
        if m.group(5) is not None:
            tau = tuple(int(x) for x in m.group(5).replace(" ", "").split(",") if x)
            out.append(("S", partition(tau)))
        else:
            kind, i = m.group(1), int(m.group(2))
            if m.group(3) is not None:
                out.append((kind, i, int(m.group(3)), True))
            else:
                out.append((kind, i, int(m.group(4) or 1), False))
        pos = m.end()
    return out


def normal_form(word: str | Iterable[tuple], n: int) -> GarlandElement:
    """Garland-basis expansion of a word of generators acting on 1_n.

    Letters are ``(kind, index, power, divided)`` for kind in E/F/H, or
    ``("S", tau)`` for phi(s_tau).
    """
    letters = parse_word(word) if isinstance(word, str) else list(word)
    terms: Terms = {_ID: Fraction(1)}
    for letter in reversed(letters):
        if letter[0] == "S":
            new: Terms = {}
            for rho, c in sf.schur_to_power_sums(letter[1]).items():
                for m, v in act([("H", r) for r in rho], terms, n).items():
                    _add(new, m, v * c)
            terms = new
            continue
        kind, i, power, divided = letter
        if power < 0:
            raise ValueError("negative exponent")
        terms = act([(kind, i)] * power, terms, n)
        if divided:
            terms = {m: c / factorial(power) for m, c in terms.items()}
    target = n + sum((2 if l[0] == "E" else -2 if l[0] == "F" else 0) * l[2] for l in letters if l[0] != "S")
    if not terms:
        return GarlandElement.zero(n, target)
    return pbw_to_garland(terms, n)


# ---------------------------------------------------------------------------
# The automorphism Phi: E_i <-> F_i, H_i -> -H_i, 1_n -> 1_{-n}


def apply_Phi(x: GarlandElement) -> GarlandElement:
    n = -x.source
    acc: Terms = {}
    for w, v in x.items():
        fs, cf = _expand_power_part(w.F)
        es, ce = _expand_power_part(w.E)
        for rho, c in sf.schur_to_power_sums(w.tau).items():
            sign = (-1) ** len(rho)
            gens = [("E", i) for i in fs] + [("H", r) for r in rho] + [("F", k) for k in es]
            for m, c2 in act(gens, {_ID: Fraction(1)}, n).items():
                _add(acc, m, c2 * c * cf * ce * sign * v)
    if not acc:
        return GarlandElement.zero(n, -x.target)
    return pbw_to_garland(acc, n)


# ---------------------------------------------------------------------------
# Enumeration of the basis


def _power_parts(total: int, degree: int) -> list[tuple[tuple[int, int], ...]]:
    """Divided-power parts of total thickness ``total`` and loop degree ``degree``.

    These correspond to partitions of ``degree`` with exactly ``total`` parts
    counting zeros: the part value is the loop index.
    """
    out = []
    for lam in partitions_of(degree, None, total):
        padded = tuple(lam) + (0,) * (total - len(lam))
        out.append(_powers((i, 1) for i in padded))
    return out


def enumerate_basis(n: int, m: int, D: int, extra: int = 0) -> list[GarlandWord]:
    """Garland words 1_m ... 1_n of loop degree <= D.

    Every hom space contains F_0^(a) E_0^(a + k) for all a, so the F-thickness
    is bounded: sum a <= max(0, -k) + extra, where k = (m - n) / 2.
    """
    if (m - n) % 2:
        raise ValueError("source and target weights must have the same parity")
    if extra < 0:
        raise ValueError("extra thickness must be nonnegative")
    k = (m - n) // 2
    out = []
    for fa in range(max(0, -k), max(0, -k) + extra + 1):
        ec = fa + k
        for d in range(D + 1):
            for df in range(d + 1):
                for de in range(d - df + 1):
                    dt = d - df - de
                    for fpart in _power_parts(fa, df):
                        for epart in _power_parts(ec, de):
                            for tau in partitions_of(dt):
                                out.append(GarlandWord(n, fpart, tau, epart))
    return sorted(out, key=lambda w: (w.loop_degree, w))


def dumps(x: GarlandElement) -> str:
    return json.dumps(x.to_json(), sort_keys=True)
