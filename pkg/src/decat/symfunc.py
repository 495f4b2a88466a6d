"""Exact ring of symmetric functions in the Schur basis.

Products use the Jacobi-Trudi expansion of one factor (in complete or
elementary functions, whichever determinant is smaller) followed by iterated
Pieri rules.  Everything is integral; no floating point anywhere.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from .partitions import (
    Partition,
    conjugate,
    horizontal_strips,
    multiplicities,
    pad,
    partition,
    trim,
    vertical_strips,
)


class SymElement:
    """Finite integer combination of Schur functions.

    ``nvars`` is an optional bound on the number of variables: with a bound
    ``a`` the element lives in Sym_a and only partitions with at most ``a``
    parts may appear.  ``None`` means the full ring Sym.
    """

    __slots__ = ("_c", "nvars", "_hash")

    def __init__(self, coeffs: Mapping[Partition, int] | None = None, nvars: int | None = None):
        c: dict[Partition, int] = {}
        for lam, v in (coeffs or {}).items():
            if v:
                lam = partition(lam)
                c[lam] = c.get(lam, 0) + int(v)
        c = {k: v for k, v in c.items() if v}
        if nvars is not None:
            if nvars < 0:
                raise ValueError("variable bound must be nonnegative")
            bad = [lam for lam in c if len(lam) > nvars]
            if bad:
                raise ValueError(f"partitions {bad} have more than {nvars} parts")
        self._c = c
        self.nvars = nvars
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, c: dict[Partition, int], nvars: int | None) -> "SymElement":
        obj = cls.__new__(cls)
        obj._c = {k: v for k, v in c.items() if v}
        obj.nvars = nvars
        obj._hash = None
        return obj

    # -- container protocol ---------------------------------------------------
    def items(self):
        return self._c.items()

    def coeff(self, lam: Iterable[int]) -> int:
        return self._c.get(trim(lam), 0)

    def support(self) -> list[Partition]:
        return sorted(self._c)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._c))

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._c}

    def homogeneous_part(self, d: int) -> "SymElement":
        return SymElement._raw({k: v for k, v in self._c.items() if sum(k) == d}, self.nvars)

    # -- arithmetic -----------------------------------------------------------
    def _bound_with(self, other: "SymElement") -> int | None:
        if self.nvars is None:
            return other.nvars
        if other.nvars is None:
            return self.nvars
        if self.nvars != other.nvars:
            raise ValueError(f"incompatible variable bounds {self.nvars} and {other.nvars}")
        return self.nvars

    def __add__(self, other):
        if isinstance(other, int):
            other = SymElement._raw({(): other}, self.nvars)
        if not isinstance(other, SymElement):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return SymElement._raw(c, self._bound_with(other))

    __radd__ = __add__

    def __neg__(self):
        return SymElement._raw({k: -v for k, v in self._c.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SymElement._raw({k: v * other for k, v in self._c.items()}, self.nvars)
        if not isinstance(other, SymElement):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = SymElement._raw({(): 1}, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SymElement({(): other})
        if not isinstance(other, SymElement):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for lam in sorted(self._c, key=lambda l: (-sum(l), tuple(-x for x in l))):
            v = self._c[lam]
            name = "s[" + ",".join(map(str, lam)) + "]"
            if v == 1:
                terms.append(f"+ {name}")
            elif v == -1:
                terms.append(f"- {name}")
            else:
                terms.append(f"{'+' if v > 0 else '-'} {abs(v)}*{name}")
        out = " ".join(terms)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    # -- serialization --------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coeff": str(self._c[lam])} for lam in sorted(self._c)]

    @classmethod
    def from_json(cls, data: list[dict], nvars: int | None = None) -> "SymElement":
        c: dict[Partition, int] = {}
        for term in data:
            lam = partition(term["partition"])
            c[lam] = c.get(lam, 0) + int(term["coeff"])
        return cls(c, nvars)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# Basic elements


def schur(lam: Iterable[int], nvars: int | None = None) -> SymElement:
    lam = partition(lam)
    if nvars is not None and len(lam) > nvars:
        return SymElement._raw({}, nvars)
    return SymElement._raw({lam: 1}, nvars)


def one(nvars: int | None = None) -> SymElement:
    return SymElement._raw({(): 1}, nvars)


def zero(nvars: int | None = None) -> SymElement:
    return SymElement._raw({}, nvars)


def e(j: int) -> SymElement:
    if j < 0:
        return zero()
    return schur((1,) * j)


def h(j: int) -> SymElement:
    if j < 0:
        return zero()
    return schur((j,) if j else ())


@lru_cache(maxsize=None)
def _power_sum(t: int) -> SymElement:
    # p_t is the alternating sum of hook Schur functions
    if t == 0:
        raise ValueError("p_0 is not an element of Sym")
    return SymElement._raw({trim((t - k,) + (1,) * k): (-1) ** k for k in range(t)}, None)


def p(t: int) -> SymElement:
    if t < 0:
        raise ValueError("power sums need a positive index")
    return _power_sum(t)


def p_product(rho: Iterable[int]) -> SymElement:
    out = one()
    for part in rho:
        out = out * p(part)
    return out


@lru_cache(maxsize=None)
def _e_tj(t: int, j: int) -> SymElement:
    if j == 0:
        return one()
    if t == 0:
        raise ValueError("e_{0,j} is not an element of Sym for j > 0")
    acc = zero()
    for i in range(1, j + 1):
        acc = acc + (-1) ** (i - 1) * (_e_tj(t, j - i) * p(i * t))
    out = {}
    for lam, v in acc.items():
        q, r = divmod(v, j)
        if r:
            raise ArithmeticError(f"e_{{{t},{j}}} recursion is not integral at {lam}")
        out[lam] = q
    return SymElement._raw(out, None)


def e_tj(t: int, j: int) -> SymElement:
    """e_{t,j}: the j-th elementary function in the t-th powers of the variables.

    Computed only by the Newton-type recursion j e_{t,j} = sum (-1)^(i-1) e_{t,j-i} p_{it}.
    """
    if t < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    return _e_tj(t, j)


def e_tj_closed_form(t: int, j: int) -> dict[tuple[int, ...], Fraction]:
    """Power-sum coefficients of e_{t,j} from the cycle-index formula.

    Keys are exponent vectors ``(k_1, k_2, ...)`` meaning prod p_{it}^{k_i}; the
    coefficient is (-1)^(j - sum k) / prod(i^k_i * k_i!).
    """
    out = {}
    for rho in _partitions(j):
        m = multiplicities(rho)
        ks = tuple(m.get(i, 0) for i in range(1, (rho[0] if rho else 0) + 1))
        denom = prod(i ** k * factorial(k) for i, k in m.items())
        out[ks] = Fraction((-1) ** (j - len(rho)), denom)
    return out


def e_tj_printed_coefficients(j: int) -> dict[tuple[int, ...], Fraction]:
    """The variant of the closed form without the factorial on multiplicities.

    Kept only so the discrepancy with the recursion can be demonstrated.
    """
    out = {}
    for rho in _partitions(j):
        m = multiplicities(rho)
        ks = tuple(m.get(i, 0) for i in range(1, (rho[0] if rho else 0) + 1))
        denom = prod(i ** k * k for i, k in m.items())
        out[ks] = Fraction((-1) ** (j - len(rho)), denom)
    return out


def from_power_exponents(t: int, coeffs: Mapping[tuple[int, ...], Fraction]) -> dict[Partition, Fraction]:
    """Evaluate sum c * prod p_{it}^{k_i} in the Schur basis with rational coefficients."""
    out: dict[Partition, Fraction] = {}
    for ks, c in coeffs.items():
        rho = []
        for i, k in enumerate(ks, start=1):
            rho.extend([i * t] * k)
        for lam, v in p_product(sorted(rho, reverse=True)).items():
            out[lam] = out.get(lam, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _partitions(n: int):
    from .partitions import partitions_of

    return partitions_of(n)


# ---------------------------------------------------------------------------
# Multiplication


def _jt_terms(mu: Partition) -> tuple[str, dict[tuple[int, ...], int]]:
    """Jacobi-Trudi expansion of s_mu as a polynomial in h's or e's.

    Returns ("h" | "e", {sorted index tuple: coefficient}) using the smaller of
    the two determinants.
    """
    if len(mu) <= (mu[0] if mu else 0):
        kind, rows = "h", mu
    else:
        kind, rows = "e", conjugate(mu)
    l = len(rows)
    terms: dict[tuple[int, ...], int] = {}
    for sigma in permutations(range(l)):
        idx = [rows[i] - i + sigma[i] for i in range(l)]
        if any(x < 0 for x in idx):
            continue
        inv = sum(1 for i in range(l) for j in range(i + 1, l) if sigma[i] > sigma[j])
        key = tuple(sorted((x for x in idx if x > 0), reverse=True))
        terms[key] = terms.get(key, 0) + (-1) ** inv
    return kind, {k: v for k, v in terms.items() if v}


_jt_terms = lru_cache(maxsize=None)(_jt_terms)


@lru_cache(maxsize=200_000)
def _pieri(lam: Partition, k: int, kind: str) -> tuple[Partition, ...]:
    strips = horizontal_strips if kind == "h" else vertical_strips
    return tuple(strips(lam, k))


@lru_cache(maxsize=200_000)
def _schur_product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    kind, terms = _jt_terms(mu)
    total: dict[Partition, int] = {}
    for idx, c in terms.items():
        cur = {lam: c}
        for k in idx:
            nxt: dict[Partition, int] = {}
            for nu, v in cur.items():
                for rho in _pieri(nu, k, kind):
                    nxt[rho] = nxt.get(rho, 0) + v
            cur = nxt
        for nu, v in cur.items():
            total[nu] = total.get(nu, 0) + v
    return tuple(sorted((k, v) for k, v in total.items() if v))


def schur_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Littlewood-Richardson expansion of s_lam * s_mu."""
    lam, mu = trim(lam), trim(mu)
    # expand the factor with the cheaper determinant
    if _det_size(lam) < _det_size(mu):
        lam, mu = mu, lam
    return dict(_schur_product(lam, mu))


def _det_size(mu: Partition) -> int:
    return min(len(mu), mu[0] if mu else 0)


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """N^lam_{mu nu}: coefficient of s_lam in s_mu * s_nu."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    return schur_product(mu, nu).get(lam, 0)


def mul(x: SymElement, y: SymElement) -> SymElement:
    bound = x._bound_with(y)
    out: dict[Partition, int] = {}
    for lam, a in x._c.items():
        for mu, b in y._c.items():
            for nu, v in schur_product(lam, mu).items():
                if bound is not None and len(nu) > bound:
                    continue
                out[nu] = out.get(nu, 0) + a * b * v
    return SymElement._raw(out, bound)


def truncate(x: SymElement, a: int) -> SymElement:
    """Image of ``x`` in Sym_a: drop partitions with more than ``a`` parts."""
    if a < 0:
        raise ValueError("variable bound must be nonnegative")
    return SymElement._raw({k: v for k, v in x.items() if len(k) <= a}, a)


def unbound(x: SymElement) -> SymElement:
    return SymElement._raw(dict(x.items()), None)


# ---------------------------------------------------------------------------
# Hopf structure and involutions


def antipode(x: SymElement) -> SymElement:
    """S(s_lam) = (-1)^|lam| s_{lam^t}."""
    return SymElement._raw({conjugate(k): (-1) ** sum(k) * v for k, v in x.items()}, None)


def omega(x: SymElement) -> SymElement:
    return SymElement._raw({conjugate(k): v for k, v in x.items()}, None)


def counit(x: SymElement) -> int:
    return x.coeff(())


def coproduct(x: SymElement) -> dict[tuple[Partition, Partition], int]:
    """Delta(s_lam) = sum N^lam_{mu nu} s_mu (x) s_nu."""
    out: dict[tuple[Partition, Partition], int] = {}
    for lam, v in x.items():
        n = sum(lam)
        for k in range(n + 1):
            for mu in _partitions(k):
                if not _contains(lam, mu):
                    continue
                for nu in _partitions(n - k):
                    c = lr_coefficient(lam, mu, nu)
                    if c:
                        out[(mu, nu)] = out.get((mu, nu), 0) + v * c
    return {k: v for k, v in out.items() if v}


def skew(lam: Iterable[int], mu: Iterable[int]) -> SymElement:
    """Skew Schur function s_{lam/mu} = sum_nu N^lam_{nu mu} s_nu."""
    lam, mu = partition(lam), partition(mu)
    out = {}
    if _contains(lam, mu):
        for nu in _partitions(sum(lam) - sum(mu)):
            c = lr_coefficient(lam, nu, mu)
            if c:
                out[nu] = c
    return SymElement._raw(out, None)


def _contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


# ---------------------------------------------------------------------------
# Straightening and the wedge product


def straighten(seq: Iterable[int]) -> tuple[int, Partition] | None:
    """Normalize s_m for an integer sequence m of length a with m_j >= j - a.

    Returns ``None`` when the determinant vanishes, otherwise ``(sign, lam)``
    with ``s_m = sign * s_lam``.
    """
    m = tuple(int(x) for x in seq)
    a = len(m)
    shifted = []
    for j, x in enumerate(m, start=1):
        if x < j - a:
            raise ValueError(f"entry {j} of {m} is below the bound {j - a}")
        shifted.append(x + a - j)
    if len(set(shifted)) < a:
        return None
    # sign of the permutation sorting ``shifted`` into decreasing order
    inv = sum(1 for i in range(a) for j in range(i + 1, a) if shifted[i] < shifted[j])
    srt = sorted(shifted, reverse=True)
    lam = trim(srt[j] - (a - 1 - j) for j in range(a))
    return (-1) ** inv, lam


def schur_of_sequence(seq: Iterable[int], nvars: int | None = None) -> SymElement:
    r = straighten(seq)
    if r is None:
        return zero(nvars)
    sign, lam = r
    return SymElement._raw({lam: sign}, nvars)


def wedge(a: int, b: int, x: SymElement, y: SymElement) -> SymElement:
    """Wedge product Sym_a x Sym_b -> Sym_{a+b}: s_lam ^ s_mu = s_{(lam - b) u mu}."""
    for lam in x.support():
        if len(lam) > a:
            raise ValueError(f"{lam} has more than {a} parts")
    for mu in y.support():
        if len(mu) > b:
            raise ValueError(f"{mu} has more than {b} parts")
    out: dict[Partition, int] = {}
    for lam, u in x.items():
        shifted = tuple(v - b for v in pad(lam, a))
        for mu, v in y.items():
            r = straighten(shifted + pad(mu, b))
            if r is None:
                continue
            sign, nu = r
            out[nu] = out.get(nu, 0) + sign * u * v
    return SymElement._raw(out, a + b)


# ---------------------------------------------------------------------------
# Words in e / h / p / e_{t,j}

_TOKEN = re.compile(r"\s*(?:(e)\((\d+),(\d+)\)|(e|h|p)(\d+)|(s)\[([\d,\s]*)\])\s*\*?")


def parse_word(word: str) -> list[tuple]:
    """Parse a product like ``"e2 h1 p3 e(2,1) s[2,1]"`` into factor tuples."""
    pos, out = 0, []
    word = word.strip()
    while pos < len(word):
        m = _TOKEN.match(word, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse factor at {word[pos:]!r}")
        if m.group(1):
            out.append(("etj", int(m.group(2)), int(m.group(3))))
        elif m.group(4):
            out.append((m.group(4), int(m.group(5))))
        else:
            body = m.group(7).strip()
            parts = [int(x) for x in body.split(",") if x.strip()] if body else []
            out.append(("s", tuple(parts)))
        pos = m.end()
    return out


def to_schur(word: str | Iterable[tuple]) -> SymElement:
    """Expand a product of e_j, h_j, p_t, e_{t,j} (and s_lam) factors in Schur functions."""
    factors = parse_word(word) if isinstance(word, str) else list(word)
    out = one()
    for f in factors:
        kind = f[0]
        if kind == "e":
            g = e(f[1])
        elif kind == "h":
            g = h(f[1])
        elif kind == "p":
            g = p(f[1])
        elif kind == "etj":
            g = e_tj(f[1], f[2])
        elif kind == "s":
            g = schur(f[1])
        else:
            raise ValueError(f"unknown factor {f!r}")
        out = out * g
    return out


# ---------------------------------------------------------------------------
# Characters: change of basis between Schur and power sums


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    """chi^lam(rho) for lam, rho partitions of n: coefficient of s_lam in p_rho."""
    out = {}
    for rho in _partitions(n):
        for lam, v in p_product(rho).items():
            out[(lam, rho)] = v
    return out


def z_factor(rho: Partition) -> int:
    return prod(i ** k * factorial(k) for i, k in multiplicities(rho).items())


def schur_to_power_sums(lam: Partition) -> dict[Partition, Fraction]:
    """s_lam = sum_rho chi^lam(rho) / z_rho * p_rho."""
    lam = trim(lam)
    n = sum(lam)
    table = character_table(n)
    out = {}
    for rho in _partitions(n):
        c = table.get((lam, rho), 0)
        if c:
            out[rho] = Fraction(c, z_factor(rho))
    return out


def power_sums_to_schur(rho: Partition) -> dict[Partition, int]:
    return dict(p_product(trim(rho)).items())
