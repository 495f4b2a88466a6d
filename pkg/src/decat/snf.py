"""Exact Smith normal form over the integers.

Dense matrices are lists of rows of Python ints.  ``smith_normal_form``
optionally tracks the left transform U with U A V = D, which is what a
cokernel presentation needs.  ``elementary_divisors`` is the workhorse for
large sparse boundary matrices: it clears unit pivots sparsely and only falls
back to the dense algorithm on the remaining core.
"""

from __future__ import annotations

from dataclasses import dataclass

STRATEGIES = ("min", "first")


@dataclass
class SNFResult:
    diagonal: list[int]  # nonzero invariant factors, each dividing the next
    shape: tuple[int, int]
    left: list[list[int]] | None = None

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def identity_matrix(k: int) -> list[list[int]]:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def _pick_pivot(A, t, strategy):
    rows, cols = len(A), len(A[0]) if A else 0
    best = None
    for i in range(t, rows):
        row = A[i]
        for j in range(t, cols):
            v = row[j]
            if v:
                if strategy == "first":
                    return i, j
                if best is None or abs(v) < best[0]:
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        return i, j
    return None if best is None else best[1:]


def smith_normal_form(matrix, strategy: str = "min", track_left: bool = False) -> SNFResult:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown pivot strategy {strategy!r}")
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(row) != cols for row in A):
        raise ValueError("ragged matrix")
    U = identity_matrix(rows) if track_left else None

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def add_row(dst, src, c):  # row dst += c * row src
        rd, rs = A[dst], A[src]
        for j in range(cols):
            if rs[j]:
                rd[j] += c * rs[j]
        if U is not None:
            ud, us = U[dst], U[src]
            for j in range(rows):
                if us[j]:
                    ud[j] += c * us[j]

    def negate_row(i):
        A[i] = [-v for v in A[i]]
        if U is not None:
            U[i] = [-v for v in U[i]]

    diag = []
    t = 0
    while t < min(rows, cols):
        pos = _pick_pivot(A, t, strategy)
        if pos is None:
            break
        i, j = pos
        swap_rows(t, i)
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // p
                    add_row(i, t, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A:
                        if row[t]:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t into the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            negate_row(t)
        diag.append(A[t][t])
        t += 1
    return SNFResult(diag, (rows, cols), U)


def elementary_divisors(columns: list[dict[int, int]], nrows: int, strategy: str = "min") -> list[int]:
    """Nonzero invariant factors of a sparse matrix given column by column."""
    cols = {c: dict(col) for c, col in enumerate(columns) if col}
    rows: dict[int, set[int]] = {}
    for c, col in cols.items():
        for r in col:
            rows.setdefault(r, set()).add(c)
    units = 0
    # Row and column operations with a unit pivot leave the divisors of the
    # remaining block unchanged; the pivot itself contributes a 1.
    queue = sorted(cols, key=lambda c: len(cols[c]))
    changed = True
    while changed:
        changed = False
        for c in queue:
            col = cols.get(c)
            if not col:
                continue
            r = min((r for r, v in col.items() if v in (1, -1)), key=lambda r: len(rows[r]), default=None)
            if r is None:
                continue
            v = col[r]
            for c2 in list(rows[r]):
                if c2 == c:
                    continue
                other = cols[c2]
                f = other[r] * v  # v = +-1 so v^-1 = v
                for rr, x in col.items():
                    y = other.get(rr, 0) - f * x
                    if y:
                        if rr not in other:
                            rows[rr].add(c2)
                        other[rr] = y
                    elif rr in other:
                        del other[rr]
                        rows[rr].discard(c2)
                if not other:
                    del cols[c2]
            for rr in col:
                rows[rr].discard(c)
            del rows[r]
            del cols[c]
            units += 1
            changed = True
        queue = sorted(cols, key=lambda c: len(cols[c]))
    if not cols:
        return [1] * units
    live_rows = sorted({r for col in cols.values() for r in col})
    index = {r: i for i, r in enumerate(live_rows)}
    order = sorted(cols)
    dense = [[0] * len(order) for _ in live_rows]
    for j, c in enumerate(order):
        for r, v in cols[c].items():
            dense[index[r]][j] = v
    return [1] * units + smith_normal_form(dense, strategy).diagonal


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(row[k] * B[k][j] for k in range(inner) if row[k]) for j in range(cols)] for row in A]
