"""Idempotented integral quantum sl2 in Lusztig's canonical basis.

Laurent polynomials are dicts {exponent: coefficient} wrapped in a small
immutable class.  Products of canonical words are normalized with the
divided-power relations: E-E and F-F merges with quantum binomials, and the
EF/FE commutation with a quantum binomial whose top may be negative.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        self._c = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def q(cls, k: int = 1) -> "LaurentPoly":
        return cls({k: 1})

    def items(self):
        return self._c.items()

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for a, x in self._c.items():
            for b, y in other._c.items():
                c[a + b] = c.get(a + b, 0) + x * y
        return LaurentPoly(c)

    __rmul__ = __mul__

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-k: v for k, v in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient self / other; raises ValueError unless the division is exact."""
        if not other:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        top = max(other._c)
        lead = other._c[top]
        rem = LaurentPoly(self._c)
        quot: dict[int, int] = {}
        low = min(other._c)
        while rem:
            k = max(rem._c)
            if k - top < min(rem._c) - low or rem._c[k] % lead:
                raise ValueError("division is not exact")
            c = rem._c[k] // lead
            quot[k - top] = c
            rem = rem - LaurentPoly({k - top: c}) * other
        return LaurentPoly(quot)

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for k in sorted(self._c, reverse=True):
            v = self._c[k]
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k == 0:
                parts.append(f"{v:+d}")
            elif v == 1:
                parts.append(f"+{mono}")
            elif v == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{v:+d}*{mono}")
        s = " ".join(parts)
        return s[1:] if s.startswith("+") else s

    def to_json(self) -> dict[str, str]:
        return {str(k): str(v) for k, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(k): int(v) for k, v in data.items()})


ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def qint(m: int) -> LaurentPoly:
    """Quantum integer [m] = q^(m-1) + q^(m-3) + ... + q^(1-m); [-m] = -[m]."""
    if m == 0:
        return ZERO
    if m < 0:
        return -qint(-m)
    return LaurentPoly({m - 1 - 2 * i: 1 for i in range(m)})


def qfactorial(m: int) -> LaurentPoly:
    out = ONE
    for i in range(1, m + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def gauss_binom(m: int, j: int) -> LaurentPoly:
    """Quantum binomial [m choose j] for any integer m and j >= 0.

    Negative tops use [m choose j] = (-1)^j [j - m - 1 choose j], which is the
    product formula prod_{i=1..j} [m - i + 1] / [i] rearranged.
    """
    if j < 0:
        raise ValueError("lower index must be nonnegative")
    if j == 0:
        return ONE
    if m < 0:
        return gauss_binom(j - m - 1, j) * (-1) ** j
    if j > m:
        return ZERO
    # q-Pascal rule, balanced form
    return gauss_binom(m - 1, j) * LaurentPoly.q(j) + gauss_binom(m - 1, j - 1) * LaurentPoly.q(j - m)


# ---------------------------------------------------------------------------
# Canonical words


@dataclass(frozen=True, order=True)
class CanonicalWord:
    """E^(a)F^(b)1_n ("EF", needs n <= b - a) or F^(b)E^(a)1_n ("FE", needs n >= b - a).

    At n = b - a the two shapes coincide; the FE shape is the stored one.
    """

    shape: str
    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("divided powers must be nonnegative")
        if self.shape == "EF":
            if self.n > self.b - self.a:
                raise ValueError(f"E^({self.a})F^({self.b})1_{self.n} is not canonical")
            if self.n == self.b - self.a:
                object.__setattr__(self, "shape", "FE")
        elif self.shape == "FE":
            if self.n < self.b - self.a:
                raise ValueError(f"F^({self.b})E^({self.a})1_{self.n} is not canonical")
        else:
            raise ValueError(f"unknown shape {self.shape!r}")

    @property
    def source(self) -> int:
        return self.n

    @property
    def target(self) -> int:
        return self.n + 2 * (self.a - self.b)

    def letters(self) -> tuple[tuple[str, int], ...]:
        """Left-to-right divided-power letters, identity letters dropped."""
        if self.shape == "EF":
            seq = (("E", self.a), ("F", self.b))
        else:
            seq = (("F", self.b), ("E", self.a))
        return tuple(x for x in seq if x[1])

    def __str__(self):
        parts = [f"{k}^({v})" for k, v in self.letters()]
        return "".join(parts) + f"1_{self.n}"

    def to_json(self) -> dict:
        return {"shape": self.shape, "a": self.a, "b": self.b, "n": self.n}


def canonical(a: int, b: int, n: int) -> CanonicalWord:
    """The canonical basis element with E-power a and F-power b on 1_n."""
    return CanonicalWord("FE" if n >= b - a else "EF", a, b, n)


class BlmElement:
    """A(q)-combination of canonical words with common source and target weights."""

    __slots__ = ("_c", "source", "target")

    def __init__(self, coeffs: Mapping[CanonicalWord, LaurentPoly], source: int, target: int):
        c = {}
        for w, v in coeffs.items():
            if w.source != source or w.target != target:
                raise ValueError(f"{w} does not belong to 1_{target} U 1_{source}")
            if not isinstance(v, LaurentPoly):
                v = LaurentPoly(v)
            if v:
                c[w] = c.get(w, ZERO) + v
        self._c = {k: v for k, v in c.items() if v}
        self.source = source
        self.target = target

    @classmethod
    def word(cls, w: CanonicalWord, coeff: LaurentPoly | int = 1) -> "BlmElement":
        return cls({w: coeff if isinstance(coeff, LaurentPoly) else LaurentPoly(coeff)}, w.source, w.target)

    @classmethod
    def idempotent(cls, n: int) -> "BlmElement":
        return cls.word(canonical(0, 0, n))

    def items(self):
        return self._c.items()

    def __eq__(self, other):
        if not isinstance(other, BlmElement):
            return NotImplemented
        return (self.source, self.target, self._c) == (other.source, other.target, other._c)

    def __add__(self, other: "BlmElement") -> "BlmElement":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("weight mismatch in sum")
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, ZERO) + v
        return BlmElement(c, self.source, self.target)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return BlmElement({k: v * other for k, v in self._c.items()}, self.source, self.target)
        return mul(self, other)

    def __repr__(self):
        if not self._c:
            return f"0 (1_{self.target} U 1_{self.source})"
        return " + ".join(f"({v})*{w}" for w, v in sorted(self._c.items()))

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "terms": [{"word": w.to_json(), "coeff": v.to_json()} for w, v in sorted(self._c.items())],
        }


# ---------------------------------------------------------------------------
# Rewriting

Word = tuple[tuple[str, int], ...]


def _merge(word: Word) -> Word:
    return tuple(x for x in word if x[1])


@lru_cache(maxsize=None)
def normalize(word: Word, n: int) -> tuple[tuple[CanonicalWord, LaurentPoly], ...]:
    """Canonical-basis expansion of a word of divided powers acting on 1_n.

    ``word`` lists letters left to right, e.g. (("E", 1), ("F", 2)).
    """
    word = _merge(word)
    # merge equal neighbours
    for i in range(len(word) - 1):
        (x, a), (y, b) = word[i], word[i + 1]
        if x == y:
            rest = word[:i] + ((x, a + b),) + word[i + 2 :]
            return _scale(normalize(rest, n), gauss_binom(a + b, b))
    if len(word) <= 1 or (len(word) == 2 and _is_canonical(word, n)):
        return ((_as_canonical(word, n), ONE),)
    # rewrite the rightmost non-canonical EF / FE pair
    for i in range(len(word) - 2, -1, -1):
        w = n + sum(2 * k if x == "E" else -2 * k for x, k in word[i + 2 :])
        (x, a), (y, b) = word[i], word[i + 1]
        if x == "E":
            ea, fb = a, b
            if w >= fb - ea:
                return _commute(word, i, "FE", ea, fb, w, n)
        else:
            fb, ea = a, b
            if w < fb - ea:
                return _commute(word, i, "EF", ea, fb, w, n)
    # every pair is already in its preferred shape; the commutation formulas
    # hold at all weights, so commuting the rightmost pair still makes progress
    i = len(word) - 2
    w = n
    (x, a), (_, b) = word[i], word[i + 1]
    if x == "E":
        return _commute(word, i, "FE", a, b, w, n)
    return _commute(word, i, "EF", b, a, w, n)


def _commute(word: Word, i: int, to: str, a: int, b: int, w: int, n: int):
    acc: dict[CanonicalWord, LaurentPoly] = {}
    for j in range(min(a, b) + 1):
        if to == "FE":
            coeff = gauss_binom(a - b + w, j)
            mid = (("F", b - j), ("E", a - j))
        else:
            coeff = gauss_binom(b - a - w, j)
            mid = (("E", a - j), ("F", b - j))
        if not coeff:
            continue
        for cw, v in normalize(word[:i] + mid + word[i + 2 :], n):
            acc[cw] = acc.get(cw, ZERO) + coeff * v
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def _scale(terms, c: LaurentPoly):
    return tuple((k, v * c) for k, v in terms if v * c)


def _is_canonical(word: Word, n: int) -> bool:
    (x, a), (_, b) = word
    if x == "E":
        return n < b - a
    return n >= a - b


def _as_canonical(word: Word, n: int) -> CanonicalWord:
    a = sum(k for x, k in word if x == "E")
    b = sum(k for x, k in word if x == "F")
    if len(word) == 2 and word[0][0] == "E":
        return CanonicalWord("EF", a, b, n)
    if len(word) == 2:
        return CanonicalWord("FE", a, b, n)
    return canonical(a, b, n)


def mul(x: BlmElement, y: BlmElement) -> BlmElement:
    """Product x * y (y acts first); requires target(y) == source(x)."""
    if y.target != x.source:
        raise ValueError(f"weight mismatch: target {y.target} of right factor != source {x.source}")
    acc: dict[CanonicalWord, LaurentPoly] = {}
    for wx, cx in x.items():
        for wy, cy in y.items():
            for w, v in normalize(wx.letters() + wy.letters(), y.source):
                acc[w] = acc.get(w, ZERO) + cx * cy * v
    return BlmElement(acc, y.source, x.target)


def word_element(letters: Iterable[tuple[str, int]], n: int) -> BlmElement:
    """Canonical expansion of an arbitrary word of divided powers on 1_n."""
    letters = tuple((str(x), int(k)) for x, k in letters)
    target = n + sum(2 * k if x == "E" else -2 * k for x, k in letters)
    return BlmElement(dict(normalize(letters, n)), n, target)


_LETTER = re.compile(r"\s*([EF])(?:\^\((\d+)\)|(\d+))?\s*")


def parse_letters(text: str) -> tuple[tuple[str, int], ...]:
    """Parse ``"E F^(2) E2"`` into divided-power letters; a bare letter has power 1."""
    text = text.strip()
    pos, out = 0, []
    while pos < len(text):
        m = _LETTER.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse letter at {text[pos:]!r}")
        out.append((m.group(1), int(m.group(2) or m.group(3) or 1)))
        pos = m.end()
    return tuple(out)


def specialize_q1(x: BlmElement) -> dict[CanonicalWord, int]:
    out = {w: v.at_one() for w, v in x.items()}
    return {k: v for k, v in out.items() if v}


def dumps(x: BlmElement) -> str:
    return json.dumps(x.to_json(), sort_keys=True)
