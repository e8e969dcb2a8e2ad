"""Exact rank of rational matrices by fraction-free elimination.

Matrices are sparse: ``{(row, col): value}`` with ``Fraction`` or ``int``
values, plus explicit shape.  Each row is first scaled to integers by the
lcm of its denominators, which leaves the rank unchanged.

Two eliminations are provided.  :func:`bareiss_rank` is the classical dense
Bareiss scheme.  :func:`sparse_rank` keeps rows as dicts, picks the shortest
available pivot row, and divides every updated row by the gcd of its
entries; differentials of the complexes here are extremely sparse, so this
is what :func:`rank` uses.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

SparseMatrix = dict  # {(row, col): Fraction}


def _integer_row(row: dict) -> dict:
    m = lcm(*(Fraction(v).denominator for v in row.values()))
    out = {c: int(Fraction(v) * m) for c, v in row.items()}
    g = gcd(*out.values())
    return {c: v // g for c, v in out.items()}


def _rows(entries: SparseMatrix) -> list[dict]:
    rows: dict[int, dict] = {}
    for (i, j), v in entries.items():
        if v:
            rows.setdefault(i, {})[j] = v
    return [_integer_row(r) for r in rows.values() if r]


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of a dense integer matrix; entries stay integral throughout."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            f = a[r][col]
            row_r = a[r]
            row_p = a[rank]
            for c in range(col, ncols):
                # exact division is the Bareiss guarantee
                row_r[c] = (p * row_r[c] - f * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def sparse_rank(rows: list[dict]) -> int:
    """Rank of integer rows given as ``{col: value}`` dicts."""
    by_col: dict[int, set[int]] = {}
    live: dict[int, dict] = {}
    for n, r in enumerate(rows):
        if r:
            live[n] = dict(r)
            for c in r:
                by_col.setdefault(c, set()).add(n)
    rank = 0
    while live:
        # shortest row, then its column touching the fewest rows
        n = min(live, key=lambda k: (len(live[k]), k))
        prow = live.pop(n)
        col = min(prow, key=lambda c: (len(by_col[c]), c))
        for c in prow:
            by_col[c].discard(n)
        p = prow[col]
        rank += 1
        for m in list(by_col.get(col, ())):
            row = live[m]
            f = row[col]
            for c in row:
                by_col[c].discard(m)
            new = {c: p * v for c, v in row.items()}
            for c, v in prow.items():
                w = new.get(c, 0) - f * v
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            if not new:
                del live[m]
                continue
            g = gcd(*new.values())
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            live[m] = new
            for c in new:
                by_col.setdefault(c, set()).add(m)
    return rank


def rank(entries: SparseMatrix, nrows: int, ncols: int) -> int:
    if nrows == 0 or ncols == 0:
        return 0
    for (i, j) in entries:
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise IndexError(f"entry {(i, j)} outside {nrows}x{ncols}")
    return sparse_rank(_rows(entries))


def dense_rank(entries: SparseMatrix, nrows: int, ncols: int) -> int:
    if nrows == 0 or ncols == 0:
        return 0
    dense = []
    for r in _rows_with_index(entries, nrows):
        dense.append([r.get(c, 0) for c in range(ncols)])
    return bareiss_rank(dense)


def _rows_with_index(entries: SparseMatrix, nrows: int) -> list[dict]:
    rows: list[dict] = [{} for _ in range(nrows)]
    for (i, j), v in entries.items():
        if v:
            rows[i][j] = v
    return [_integer_row(r) for r in rows if r]


def matmul(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Sparse product ``a @ b``; zero entries are dropped."""
    by_row: dict[int, list[tuple[int, Fraction]]] = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict[tuple[int, int], Fraction] = {}
    for (i, k), v in a.items():
        for j, w in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), 0) + v * w
    return {key: v for key, v in out.items() if v}
