"""Integer partitions as plain tuples.

A partition is a tuple of positive integers in weakly decreasing order; the
empty tuple is the empty partition.  Python's tuple comparison coincides with
the lexicographic order on zero-padded partitions, so ``sorted`` and ``<``
can be used directly.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a trimmed partition tuple."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 0:
            raise ValueError(f"negative part in {p}")
        if i and x > p[i - 1]:
            raise ValueError(f"parts of {p} are not weakly decreasing")
    return trim(p)


def trim(p: Iterable[int]) -> Partition:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def is_partition(p: Iterable[int]) -> bool:
    p = tuple(p)
    return all(x >= 0 for x in p) and all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def pad(p: Partition, a: int) -> tuple[int, ...]:
    """Pad ``p`` with zeros to exactly ``a`` entries."""
    if len(p) > a:
        raise ValueError(f"{p} has more than {a} parts")
    return tuple(p) + (0,) * (a - len(p))


def in_box(p: Partition, a: int, b: int) -> bool:
    """Membership in P(a, b): at most ``a`` parts, each at most ``b``."""
    return len(p) <= a and (not p or p[0] <= b)


def box_duals(p: Partition, a: int, b: int) -> tuple[Partition, Partition, Partition]:
    """Return (conjugate, complement, hat) of ``p`` inside the a-by-b box.

    The complement is ``(b - p_a, ..., b - p_1)`` and hat is the conjugate of
    the complement, which lies in the b-by-a box.
    """
    if a < 0 or b < 0:
        raise ValueError("box dimensions must be nonnegative")
    if not in_box(p, a, b):
        raise ValueError(f"{p} does not fit in a {a}x{b} box")
    padded = pad(p, a)
    comp = trim(b - x for x in reversed(padded))
    return conjugate(p), comp, conjugate(comp)


def multiplicities(p: Partition) -> dict[int, int]:
    return {k: len(list(g)) for k, g in groupby(p)}


def rows_as_rectangles(p: Iterable[int]) -> list[tuple[int, int]]:
    """Group a padded partition into (value, multiplicity) runs, values decreasing.

    ``(2, 2, 1, 0)`` becomes ``[(2, 2), (1, 1), (0, 1)]``.
    """
    return [(k, len(list(g))) for k, g in groupby(p)]


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts <= max_part and length <= max_len.

    Returned in decreasing lexicographic order.
    """
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        return ((),)
    if max_len == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_in_box(a: int, b: int) -> Iterator[Partition]:
    """All partitions in P(a, b), by increasing size."""
    for n in range(a * b + 1):
        yield from partitions_of(n, b, a)


def partitions_up_to(n: int, max_len: int | None = None) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from partitions_of(k, None, max_len)


def count_partitions(n: int, max_len: int | None = None) -> int:
    if n < 0:
        return 0
    return len(partitions_of(n, None, max_len))


def horizontal_strips(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by adding ``k`` boxes, no two in a column."""
    lam = tuple(lam)
    rows = len(lam) + 1
    padded = lam + (0,)

    def rec(i: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == rows:
            if left == 0:
                yield trim(acc)
            return
        cap = left if i == 0 else min(left, lam[i - 1] - padded[i])
        for add in range(cap, -1, -1):
            acc.append(padded[i] + add)
            yield from rec(i + 1, left - add, acc)
            acc.pop()

    yield from rec(0, k, [])


def vertical_strips(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions obtained from ``lam`` by adding ``k`` boxes, at most one per row."""
    for mu in horizontal_strips(conjugate(lam), k):
        yield conjugate(mu)


def removable_horizontal_strips(lam: Partition) -> Iterator[tuple[int, Partition]]:
    """Pairs (m, nu) with lam/nu a horizontal strip of size m."""
    lam = tuple(lam)
    if not lam:
        yield 0, ()
        return

    def rec(i: int, acc: list[int]) -> Iterator[list[int]]:
        if i == len(lam):
            yield acc
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for v in range(lam[i], lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, acc)
            acc.pop()

    for nu in rec(0, []):
        yield sum(lam) - sum(nu), trim(nu)
