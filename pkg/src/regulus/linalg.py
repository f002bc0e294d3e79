"""Exact rank computation for small integer matrices.

The hom/ext oracle reduces to the rank of a sparse integer matrix.  Ranks are
computed over the rationals but in integer arithmetic: rows are combined by
cross-multiplication and re-normalized by their gcd, which keeps entries small
for the near-incidence matrices produced by the oracle.  A plain Fraction
elimination is kept alongside as an independent reference for tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping


def int_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank of a matrix given as sparse rows {column: value} with int values."""
    work = [dict(r) for r in rows if any(v != 0 for v in r.values())]
    rank = 0
    while work:
        pivot_row = min(work, key=lambda r: (len(r), min(abs(v) for v in r.values())))
        work.remove(pivot_row)
        # Prefer a unit pivot so eliminations stay division-free.
        col = min(
            pivot_row, key=lambda c: (abs(pivot_row[c]) != 1, abs(pivot_row[c]), c)
        )
        p = pivot_row[col]
        rank += 1
        reduced = []
        for row in work:
            if col in row:
                q = row[col]
                new = {}
                for c in set(row) | set(pivot_row):
                    v = row.get(c, 0) * p - pivot_row.get(c, 0) * q
                    if v:
                        new[c] = v
                if new:
                    g = 0
                    for v in new.values():
                        g = gcd(g, v)
                    if g > 1:
                        new = {c: v // g for c, v in new.items()}
                    reduced.append(new)
            else:
                reduced.append(row)
        work = reduced
    return rank


def fraction_rank(rows: Iterable[Iterable[int]]) -> int:
    """Reference rank via dense Gaussian elimination over Fraction."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for i in range(row_idx, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[row_idx], mat[pivot] = mat[pivot], mat[row_idx]
        pv = mat[row_idx][col]
        for i in range(row_idx + 1, len(mat)):
            if mat[i][col] != 0:
                factor = mat[i][col] / pv
                for j in range(col, ncols):
                    mat[i][j] -= factor * mat[row_idx][j]
        row_idx += 1
        rank += 1
        if row_idx == len(mat):
            break
    return rank
