"""Slow, independent reference computations used by the verification suites.

Nothing here is used by the algebra modules themselves.  Schur polynomials
are built by enumerating semistandard tableaux; products are decomposed by
peeling off lexicographically leading dominant monomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

Monomial = tuple[int, ...]


def _ssyt(shape: tuple[int, ...], nletters: int):
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    filling: dict[tuple[int, int], int] = {}

    def rec(k: int):
        if k == len(cells):
            yield filling
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nletters + 1):
            filling[(r, c)] = v
            yield from rec(k + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_polynomial(shape: tuple[int, ...], nvars: int) -> dict[Monomial, int]:
    """Monomial expansion of s_shape in ``nvars`` variables."""
    out: dict[Monomial, int] = {}
    if len(shape) > nvars:
        return out
    for t in _ssyt(shape, nvars):
        expo = [0] * nvars
        for v in t.values():
            expo[v - 1] += 1
        key = tuple(expo)
        out[key] = out.get(key, 0) + 1
    return out


def _leq(b: Monomial, a: Monomial) -> bool:
    return all(x <= y for x, y in zip(b, a))


def _dominant(alpha: Monomial) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def poly_product_dominant(f: dict[Monomial, int], g: dict[Monomial, int]) -> dict[Monomial, int]:
    """Coefficients of the product at dominant (weakly decreasing) exponents only."""
    out: dict[Monomial, int] = {}
    targets = {}
    deg = (sum(next(iter(f))) if f else 0) + (sum(next(iter(g))) if g else 0)
    n = len(next(iter(f))) if f else 0
    for alpha in _dominant_exponents(deg, n):
        targets[alpha] = 0
    for alpha in targets:
        s = 0
        for beta, c in f.items():
            if _leq(beta, alpha):
                gamma = tuple(x - y for x, y in zip(alpha, beta))
                s += c * g.get(gamma, 0)
        if s:
            out[alpha] = s
    return out


def _dominant_exponents(deg: int, n: int):
    def rec(left, maxpart, k):
        if k == 0:
            if left == 0:
                yield ()
            return
        for v in range(min(left, maxpart), -1, -1):
            for rest in rec(left - v, v, k - 1):
                yield (v,) + rest

    yield from rec(deg, deg, n)


def decompose_symmetric(dom: dict[Monomial, int], nvars: int) -> dict[tuple[int, ...], int]:
    """Schur expansion of a symmetric polynomial given by its dominant coefficients."""
    rem = {k: v for k, v in dom.items() if v}
    out: dict[tuple[int, ...], int] = {}
    while rem:
        lead = max(rem)
        c = rem[lead]
        lam = tuple(x for x in lead if x)
        out[lam] = c
        for mono, v in schur_polynomial(lam, nvars).items():
            if _dominant(mono):
                rem[mono] = rem.get(mono, 0) - c * v
                if rem[mono] == 0:
                    del rem[mono]
    return out


def lr_product_oracle(mu: tuple[int, ...], nu: tuple[int, ...], nvars: int | None = None) -> dict[tuple[int, ...], int]:
    """Schur expansion of s_mu * s_nu via monomial expansion in |mu| + |nu| variables."""
    n = nvars if nvars is not None else max(1, sum(mu) + sum(nu))
    f = schur_polynomial(tuple(mu), n)
    g = schur_polynomial(tuple(nu), n)
    if not f or not g:
        return {}
    return decompose_symmetric(poly_product_dominant(f, g), n)


def polynomial_to_schur(poly: dict[Monomial, int], nvars: int) -> dict[tuple[int, ...], int]:
    dom = {k: v for k, v in poly.items() if _dominant(k) and v}
    return decompose_symmetric(dom, nvars)


def elementary_polynomial(j: int, nvars: int, power: int = 1) -> dict[Monomial, int]:
    """e_j(x_1^power, ..., x_n^power) as a monomial dict."""
    from itertools import combinations

    out: dict[Monomial, int] = {}
    for idx in combinations(range(nvars), j):
        expo = [0] * nvars
        for i in idx:
            expo[i] = power
        out[tuple(expo)] = out.get(tuple(expo), 0) + 1
    return out


def power_sum_polynomial(t: int, nvars: int) -> dict[Monomial, int]:
    out = {}
    for i in range(nvars):
        expo = [0] * nvars
        expo[i] = t
        out[tuple(expo)] = 1
    return out


def complete_polynomial(j: int, nvars: int) -> dict[Monomial, int]:
    from itertools import combinations_with_replacement

    out: dict[Monomial, int] = {}
    for idx in combinations_with_replacement(range(nvars), j):
        expo = [0] * nvars
        for i in idx:
            expo[i] += 1
        out[tuple(expo)] = out.get(tuple(expo), 0) + 1
    return out


def poly_mul(f: dict[Monomial, int], g: dict[Monomial, int]) -> dict[Monomial, int]:
    out: dict[Monomial, int] = {}
    for a, x in f.items():
        for b, y in g.items():
            k = tuple(i + j for i, j in zip(a, b))
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Ratio-of-determinants evaluation


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    total = Fraction(0)
    for sigma in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])
        term = Fraction((-1) ** inv)
        for i in range(n):
            term *= m[i][sigma[i]]
        total += term
    return total


def bialternant_value(seq: tuple[int, ...], point: tuple[Fraction, ...]) -> Fraction:
    """det(x_i^(m_j + a - j)) / det(x_i^(a - j)) at a point with distinct coordinates."""
    a = len(seq)
    num = [[Fraction(point[i]) ** (seq[j] + a - 1 - j) for j in range(a)] for i in range(a)]
    den = [[Fraction(point[i]) ** (a - 1 - j) for j in range(a)] for i in range(a)]
    return _det(num) / _det(den)


def schur_value(shape: tuple[int, ...], point: tuple[Fraction, ...]) -> Fraction:
    total = Fraction(0)
    for mono, c in schur_polynomial(tuple(shape), len(point)).items():
        term = Fraction(c)
        for x, k in zip(point, mono):
            term *= Fraction(x) ** k
        total += term
    return total
