"""The center End(1_n) modeled as Sym through the bubble maps b+ and b-.

Elements are stored in b+ coordinates: the value ``x`` stands for b+(x) 1_n,
and a term s_tau has degree 2|tau|.  The second map is b- = b+ o S, where S
is the antipode.  Proof: b-(h_i) = (-1)^i b+(e_i) on generators, and
S(h_i) = (-1)^i e_i; both sides are ring maps, so they agree everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import symfunc as sf
from .symfunc import SymElement


@dataclass(frozen=True)
class CenterElement:
    n: int
    value: SymElement

    def __add__(self, other: "CenterElement") -> "CenterElement":
        self._check(other)
        return CenterElement(self.n, self.value + other.value)

    def __sub__(self, other: "CenterElement") -> "CenterElement":
        self._check(other)
        return CenterElement(self.n, self.value - other.value)

    def __neg__(self) -> "CenterElement":
        return CenterElement(self.n, -self.value)

    def __mul__(self, other):
        if isinstance(other, int):
            return CenterElement(self.n, self.value * other)
        self._check(other)
        return CenterElement(self.n, sf.mul(self.value, other.value))

    __rmul__ = __mul__

    def _check(self, other: "CenterElement"):
        if self.n != other.n:
            raise ValueError(f"bubbles at weights {self.n} and {other.n} do not compose")

    def degrees(self) -> set[int]:
        return {2 * d for d in self.value.degrees()}

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def to_json(self) -> dict:
        return {"n": self.n, "value": self.value.to_json()}


def b_plus(x: SymElement, n: int) -> CenterElement:
    return CenterElement(n, sf.unbound(x))


def b_minus(x: SymElement, n: int) -> CenterElement:
    return CenterElement(n, sf.antipode(x))


def identity(n: int) -> CenterElement:
    return b_plus(sf.one(), n)


def fake_bubble_series(n: int, D: int) -> list[CenterElement]:
    """Homogeneous terms of degrees 0, 2, ..., 2D of the inverse of sum_k b+(h_k) t^k.

    The recursion c_0 = 1, c_k = -sum_{i=1..k} h_i c_{k-i} is the
    Grassmannian relation solved for the top-degree term.
    """
    if D < 0:
        raise ValueError("series length must be nonnegative")
    coeffs = [sf.one()]
    for k in range(1, D + 1):
        acc = sf.zero()
        for i in range(1, k + 1):
            acc = acc - sf.mul(sf.h(i), coeffs[k - i])
        coeffs.append(acc)
    return [CenterElement(n, c) for c in coeffs]


def series_product(left: list[SymElement], right: list[SymElement]) -> list[SymElement]:
    """Truncated product of two generating series given by their coefficient lists."""
    N = min(len(left), len(right))
    return [sum((sf.mul(left[i], right[k - i]) for i in range(k + 1)), sf.zero()) for k in range(N)]


def commutator_identity(m: int) -> SymElement:
    """sum_{l=0..m} (-1)^(m-l) l h_l e_(m-l); equal to the power sum p_m."""
    if m <= 0:
        raise ValueError("m must be positive")
    acc = sf.zero()
    for l in range(1, m + 1):
        acc = acc + sf.mul(sf.h(l), sf.e(m - l)) * ((-1) ** (m - l) * l)
    return acc


def alternating_he(m: int) -> SymElement:
    """sum_{l=0..m} (-1)^l h_(m-l) e_l, which vanishes for m >= 1."""
    acc = sf.zero()
    for l in range(m + 1):
        acc = acc + sf.mul(sf.h(m - l), sf.e(l)) * ((-1) ** l)
    return acc
