"""Generators-and-relations presentation of the hom categories V(n, m).

Objects are pairs (b, a) standing for F^(b) E^(a) 1_n with 2(a - b) = m - n.
Words list generators left to right and act right to left, starting at a
source object.  Generators:

    ("t", j)    (b, a) -> (b+1, a+1)
    ("u", j)    (b, a) -> (b-1, a-1), zero when a = 0 or b = 0
    ("d", lam)  endomorphism, lam in P(b)
    ("dp", lam) endomorphism, lam in P(a)
    ("b", lam)  endomorphism, any lam

Normal words are t_nu d_mu d'_lam u_sigma b_tau: t indices strictly
decreasing, u indices strictly increasing, at most one d, d', b each.

Degrees: with N = (m + n)/2 = n + a - b, constant on the hom category,
deg t_j = deg u_j = 1 + N + 2j and deg d_lam = deg d'_lam = deg b_lam = 2|lam|.
These come from the elementary degrees: a splitter of a + b into a and b has
degree -ab, a cap or cup of thickness k on F^(k)E^(k) with weight w to its
right has degree k^2 + kw (k^2 - kw for E^(k)F^(k)), and a dot has degree 2.
For t_j^(b,a) the cup sits at weight n + 2a and the two merges cost -a - b,
so the total is 1 + n + 2a - a - b + 2j.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping

from . import symfunc as sf
from .partitions import (
    Partition,
    partition,
    partitions_of,
    removable_horizontal_strips,
)

Gen = tuple[str, object]
Word = tuple[Gen, ...]
Obj = tuple[int, int]

KINDS = ("t", "u", "d", "dp", "b")


class VElement:
    """Integer combination of words with a common source object and weights."""

    __slots__ = ("_c", "source", "n", "N")

    def __init__(self, coeffs: Mapping[Word, int], source: Obj, n: int, N: int):
        self.source = (int(source[0]), int(source[1]))
        self.n = n
        self.N = N
        c: dict[Word, int] = {}
        for w, v in coeffs.items():
            w = tuple(_gen(g) for g in w)
            if v:
                c[w] = c.get(w, 0) + int(v)
        self._c = {k: v for k, v in c.items() if v}

    @classmethod
    def word(cls, w: Iterable[Gen], source: Obj, n: int, m: int) -> "VElement":
        if (m - n) % 2:
            raise ValueError("n and m must have the same parity")
        b, a = source
        if 2 * (a - b) != m - n:
            raise ValueError(f"object {source} does not lie in V({n}, {m})")
        w = tuple(_gen(g) for g in w)
        _path(w, (b, a))
        return cls({w: 1}, source, n, (m + n) // 2)

    def items(self):
        return self._c.items()

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if not isinstance(other, VElement):
            return NotImplemented
        return (self.source, self.n, self.N, self._c) == (other.source, other.n, other.N, other._c)

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*{format_word(w)}" for w, v in sorted(self._c.items(), key=lambda kv: _key(kv[0])))

    def to_json(self) -> dict:
        terms = sorted(self._c.items(), key=lambda kv: _key(kv[0]))
        return {
            "source": list(self.source),
            "n": self.n,
            "m": 2 * self.N - self.n,
            "terms": [{"word": format_word(w), "coeff": str(v)} for w, v in terms],
        }


def _gen(g) -> Gen:
    kind, idx = g
    if kind not in KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    if kind in ("t", "u"):
        idx = int(idx)
        if idx < 0:
            raise ValueError(f"negative dot index in {g}")
        return (kind, idx)
    return (kind, partition(idx))


_TOKEN = re.compile(r"\s*(?:([tu])(\d+)|(dp|d|b)\[([\d,\s]*)\])\s*")


def parse_word(text: str) -> Word:
    """Parse ``"t1 u0 d[2,1] dp[1] b[3]"``; the rightmost generator acts first."""
    text = text.strip()
    if text in ("", "id"):
        return ()
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse generator at {text[pos:]!r}")
        if m.group(1):
            out.append((m.group(1), int(m.group(2))))
        else:
            body = m.group(4).strip()
            out.append((m.group(3), partition(int(x) for x in body.split(",") if x.strip())))
        pos = m.end()
    return tuple(out)


def _key(w: Word):
    return tuple((k, idx if isinstance(idx, tuple) else (idx,)) for k, idx in w)


def format_word(w: Word) -> str:
    if not w:
        return "id"
    out = []
    for kind, idx in w:
        if isinstance(idx, tuple):
            out.append(f"{kind}[{','.join(map(str, idx))}]")
        else:
            out.append(f"{kind}{idx}")
    return " ".join(out)


def _step(g: Gen, obj: Obj) -> Obj | None:
    """Target of generator g at source obj; None when g is the zero morphism there."""
    b, a = obj
    kind, idx = g
    if kind == "t":
        return (b + 1, a + 1)
    if kind == "u":
        if a == 0 or b == 0:
            return None
        return (b - 1, a - 1)
    if kind == "d" and len(idx) > b:
        return None
    if kind == "dp" and len(idx) > a:
        return None
    return obj


def _path(w: Word, source: Obj) -> list[Obj] | None:
    """Objects visited by w, or None if w is the zero morphism."""
    objs = [source]
    for g in reversed(w):
        nxt = _step(g, objs[-1])
        if nxt is None:
            return None
        objs.append(nxt)
    objs.reverse()
    # objs[0] is the target of the word and objs[k + 1] is the source of w[k]
    return objs


def target(w: Word, source: Obj) -> Obj | None:
    p = _path(w, source)
    return None if p is None else p[0]


def degree(w: Word, N: int) -> int:
    total = 0
    for kind, idx in w:
        if kind in ("t", "u"):
            total += 1 + N + 2 * idx
        else:
            total += 2 * sum(idx)
    return total


# ---------------------------------------------------------------------------
# c-tilde


def c_tilde(k: int, obj: Obj) -> dict[Word, int]:
    """sum_{i+i'+i''=k} (-1)^i' b_(i) d_(1^i') d'_(i'') at object (b, a), as words."""
    b, a = obj
    out: dict[Word, int] = {}
    if k < 0:
        return out
    for i in range(k + 1):
        for ip in range(k - i + 1):
            ipp = k - i - ip
            if ip > b or (ipp > 0 and a == 0):
                continue
            w = []
            if i:
                w.append(("b", (i,)))
            if ip:
                w.append(("d", (1,) * ip))
            if ipp:
                w.append(("dp", (ipp,)))
            key = _canon(tuple(w))
            out[key] = out.get(key, 0) + (-1) ** ip
    return {k2: v for k2, v in out.items() if v}


def _canon(w: Word) -> Word:
    """Order-only normalization used when building c-tilde: d, d', b."""
    order = {"t": 0, "d": 1, "dp": 2, "u": 3, "b": 4}
    return tuple(sorted(w, key=lambda g: order[g[0]]))


# ---------------------------------------------------------------------------
# Rewriting


def _rule(left: Gen, right: Gen, src: Obj, N: int) -> list[tuple[Word, int]] | None:
    """Rewrite of the pair ``left right`` acting on src (the source of ``right``).

    Returns None when the pair is already in normal order.
    """
    (x, i), (y, j) = left, right
    b, a = src
    if x == "t" and y == "t":
        if i > j:
            return None
        if i == j:
            return []
        return [((("t", j), ("t", i)), -1)]
    if x == "u" and y == "u":
        if i < j:
            return None
        if i == j:
            return []
        return [((("u", j), ("u", i)), -1)]
    if x == y and x in ("d", "dp", "b"):
        bound = b if x == "d" else a if x == "dp" else None
        out = []
        for lam, c in sf.schur_product(i, j).items():
            if bound is not None and len(lam) > bound:
                continue
            out.append((((x, lam),) if lam else (), c))
        return out
    if x == "dp" and y == "d":
        return [(((y, j), (x, i)), 1)]
    if x in ("d", "dp") and y == "t":
        bound = b if x == "d" else a
        out = []
        for m, nu in removable_horizontal_strips(i):
            if len(nu) > bound:
                continue
            out.append((((("t", j + m),) + (((x, nu),) if nu else ())), 1))
        return out
    if x == "u" and y in ("d", "dp"):
        bound = (b if y == "d" else a) - 1
        out = []
        for m, nu in removable_horizontal_strips(j):
            if len(nu) > bound:
                continue
            out.append(((((y, nu),) if nu else ()) + (("u", i + m),), 1))
        return out
    if x == "u" and y == "t":
        out = []
        if a > 0 and b > 0:
            out.append(((("t", j), ("u", i)), -1))
        for w, c in c_tilde(1 + N + i + j, src).items():
            out.append((w, c))
        return out
    if x == "b" and y != "b":
        return [((right, left), 1)]
    return None


def _drop_identities(w: Word) -> Word:
    return tuple(g for g in w if not (g[0] in ("d", "dp", "b") and g[1] == ()))


def _find(w: Word, src: Obj, N: int, rightmost: bool):
    path = _path(w, src)
    if path is None:
        return "zero", None
    positions = range(len(w) - 2, -1, -1) if rightmost else range(len(w) - 1)
    for k in positions:
        r = _rule(w[k], w[k + 1], path[k + 2], N)
        if r is not None:
            return k, r
    return None, None


@lru_cache(maxsize=None)
def _nf(w: Word, src: Obj, N: int, rightmost: bool) -> tuple[tuple[Word, int], ...]:
    w = _drop_identities(w)
    k, r = _find(w, src, N, rightmost)
    if k == "zero":
        return ()
    if k is None:
        return ((w, 1),)
    acc: Counter = Counter()
    for mid, c in r:
        for w2, c2 in _nf(w[:k] + mid + w[k + 2 :], src, N, rightmost):
            acc[w2] += c * c2
    return tuple(sorted(((k2, v) for k2, v in acc.items() if v), key=lambda kv: _key(kv[0])))


def normal_form(x: VElement, strategy: str = "leftmost") -> VElement:
    """Rewrite every word to normal order.

    ``strategy`` picks which reducible adjacent pair is rewritten first:
    "leftmost" or "rightmost".
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    acc: Counter = Counter()
    for w, v in x.items():
        for w2, c in _nf(w, x.source, x.N, strategy == "rightmost"):
            acc[w2] += v * c
    return VElement(dict(acc), x.source, x.n, x.N)


def is_normal(w: Word, src: Obj, N: int) -> bool:
    w = tuple(_gen(g) for g in w)
    return _drop_identities(w) == w and _find(w, src, N, False) == (None, None)


# ---------------------------------------------------------------------------
# Normal forms and the B+ basis


def t_word(nu: Partition) -> Word:
    """t_nu = t_{nu_1+i-1} ... t_{nu_i}; i = len of nu padded to its own size."""
    i = len(nu)
    return tuple(("t", nu[k] + i - 1 - k) for k in range(i))


def u_word(sigma: Partition) -> Word:
    """u_sigma = u_{sigma_j} ... u_{sigma_1+j-1}."""
    j = len(sigma)
    return tuple(("u", sigma[k] + j - 1 - k) for k in range(j - 1, -1, -1))


def _padded_partitions(size: int, length: int):
    """Partitions of size with at most ``length`` parts, padded to exactly ``length``."""
    for p in partitions_of(size, None, length):
        yield tuple(p) + (0,) * (length - len(p))


def _thickness_pairs(a: int, b: int, delta: int):
    """(i, j) with i - j = delta, j <= min(a, b), i, j >= 0."""
    for j in range(max(0, -delta), min(a, b) + 1):
        yield j + delta, j


def enumerate_forms(n: int, a: int, b: int, delta: int, Dmax: int, Dmin: int | None = None) -> dict[int, int]:
    """Degree -> number of normal words t_nu d_mu d'_lam u_sigma b_tau from (b, a).

    Each candidate is checked to be irreducible under the rewriting system.
    """
    N = n + a - b
    counts: Counter = Counter()
    for w in _normal_words(N, a, b, delta, Dmax):
        if not is_normal(w, (b, a), N):
            raise AssertionError(f"{format_word(w)} is not irreducible")
        d = degree(w, N)
        if Dmin is None or d >= Dmin:
            counts[d] += 1
    return dict(sorted(counts.items()))


def _normal_words(N: int, a: int, b: int, delta: int, Dmax: int):
    for i, j in _thickness_pairs(a, b, delta):
        base = (i + j) * N + i * i + j * j
        budget = Dmax - base
        if budget < 0:
            continue
        half = budget // 2
        for s_nu in range(half + 1):
            for nu in _padded_partitions(s_nu, i):
                for s_sig in range(half - s_nu + 1):
                    for sig in _padded_partitions(s_sig, j):
                        rest = half - s_nu - s_sig
                        for s_mu in range(rest + 1):
                            for mu in partitions_of(s_mu, None, b - j):
                                for s_lam in range(rest - s_mu + 1):
                                    for lam in partitions_of(s_lam, None, a - j):
                                        for s_tau in range(rest - s_mu - s_lam + 1):
                                            for tau in partitions_of(s_tau):
                                                w = t_word(nu)
                                                w += ((("d", mu),) if mu else ())
                                                w += ((("dp", lam),) if lam else ())
                                                w += u_word(sig)
                                                w += ((("b", tau),) if tau else ())
                                                yield w


def splitter_degree(x: int, y: int) -> int:
    return -x * y


def cap_degree(k: int, w: int, shape: str) -> int:
    """Cap or cup of thickness k on F^(k)E^(k) ("FE") or E^(k)F^(k) ("EF") with weight w to its right."""
    if shape == "FE":
        return k * k + k * w
    if shape == "EF":
        return k * k - k * w
    raise ValueError(f"unknown shape {shape!r}")


def bplus_degree(n: int, a: int, b: int, i: int, j: int, sizes: int) -> int:
    """Degree of f^{b,a,i,j} with decoration sizes summing to ``sizes``, assembled piece by piece."""
    deg = 0
    # bottom: split F^(b) and E^(a), cap off F^(j) E^(j)
    deg += splitter_degree(b - j, j) + splitter_degree(a - j, j)
    deg += cap_degree(j, n + 2 * (a - j), "FE")
    # top: cup F^(i) E^(i) in the middle, merge into F^(b-j+i) E^(a-j+i)
    deg += cap_degree(i, n + 2 * (a - j), "FE")
    deg += splitter_degree(b - j, i) + splitter_degree(a - j, i)
    return deg + 2 * sizes


def bminus_degree(n: int, a: int, b: int, i: int, j: int, sizes: int) -> int:
    """Degree of g^{a,b,i,j} on E^(a) F^(b) 1_n, assembled piece by piece."""
    deg = 0
    deg += splitter_degree(a - j, j) + splitter_degree(b - j, j)
    deg += cap_degree(j, n - 2 * (b - j), "EF")
    deg += cap_degree(i, n - 2 * (b - j), "EF")
    deg += splitter_degree(a - j, i) + splitter_degree(b - j, i)
    return deg + 2 * sizes


def _partition_counts(length: int | None, upto: int) -> list[int]:
    return [len(partitions_of(s, None, length)) for s in range(upto + 1)]


def _basis_counts(n: int, a: int, b: int, delta: int, Dmax: int, degree_fn) -> dict[int, int]:
    counts: Counter = Counter()
    for i, j in _thickness_pairs(a, b, delta):
        base = degree_fn(n, a, b, i, j, 0)
        if base > Dmax:
            continue
        half = (Dmax - base) // 2
        # decorations: lam in P(a-j), mu in P(b-j), nu in P(i), sigma in P(j), tau in P
        series = [1] + [0] * half
        for length in (a - j, b - j, i, j, None):
            pc = _partition_counts(length, half)
            series = [sum(series[k] * pc[s - k] for k in range(s + 1)) for s in range(half + 1)]
        for s, c in enumerate(series):
            if c:
                counts[degree_fn(n, a, b, i, j, s)] += c
    return dict(sorted(counts.items()))


def enumerate_Bplus(n: int, a: int, b: int, delta: int, Dmax: int) -> dict[int, int]:
    """Degree -> number of elements of B+(n, a, b, delta) of that degree, up to Dmax."""
    return _basis_counts(n, a, b, delta, Dmax, bplus_degree)


def enumerate_Bminus(n: int, a: int, b: int, delta: int, Dmax: int) -> dict[int, int]:
    return _basis_counts(n, a, b, delta, Dmax, bminus_degree)


def min_degree(counts: Mapping[int, int]) -> int | None:
    return min(counts) if counts else None


def degree_zero_elements(n: int, a: int, b: int, side: str = "+") -> list[tuple[int, int]]:
    """(i, j) pairs at delta = 0 whose undecorated element has degree 0."""
    fn = bplus_degree if side == "+" else bminus_degree
    return [(i, j) for i, j in _thickness_pairs(a, b, 0) if fn(n, a, b, i, j, 0) == 0]


# ---------------------------------------------------------------------------
# Random words


def random_word(rng: random.Random, source: Obj, length: int, max_index: int = 3) -> Word:
    """A composable random word whose objects stay nonnegative (generators act right to left)."""
    obj = source
    gens: list[Gen] = []
    for _ in range(length):
        b, a = obj
        choices = ["t", "d", "dp", "b"]
        if a > 0 and b > 0:
            choices.append("u")
        kind = rng.choice(choices)
        if kind in ("t", "u"):
            g: Gen = (kind, rng.randint(0, max_index))
        else:
            bound = {"d": b, "dp": a, "b": max_index}[kind]
            parts = sorted((rng.randint(1, max_index) for _ in range(rng.randint(0, min(bound, 2)))), reverse=True)
            g = (kind, tuple(parts))
        gens.append(g)
        obj = _step(g, obj)
    return tuple(reversed(gens))
