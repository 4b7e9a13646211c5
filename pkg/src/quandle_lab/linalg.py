"""Exact linear algebra over Z_p and Z for coboundary matrices.

The mod-p routines use dense ``int64`` numpy arrays (entries stay below p**2).
Integer elementary divisors are found by sparse elimination on unit pivots
followed by a dense Smith reduction of whatever is left; coboundary matrices
are very sparse with entries in {-2..2}, so the dense remainder stays small.
"""
from __future__ import annotations

import math
from collections import defaultdict

import numpy as np

__all__ = [
    "rref_mod_p",
    "rank_mod_p",
    "nullspace_mod_p",
    "elementary_divisors",
    "invariant_factors_from_diagonal",
]


def rref_mod_p(matrix, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Z_p; returns (nonzero rows, pivot columns)."""
    a = np.array(matrix, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod_p(matrix, p: int) -> int:
    a = np.array(matrix, dtype=np.int64) % p
    if a.size == 0:
        return 0
    # eliminate along the short side
    if a.shape[0] > a.shape[1]:
        a = a.T.copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        below = a[r + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = hit + r + 1
            a[idx] = (a[idx] - np.outer(a[idx, c], a[r])) % p
        r += 1
    return r


def nullspace_mod_p(matrix, p: int) -> list[np.ndarray]:
    """Basis of ``{x : M x = 0}`` over Z_p, one vector per free column, in column order."""
    a = np.asarray(matrix)
    ncols = a.shape[1]
    reduced, pivots = rref_mod_p(a, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = np.zeros(ncols, dtype=np.int64)
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-reduced[row, free]) % p
        basis.append(v)
    return basis


def invariant_factors_from_diagonal(diag) -> list[int]:
    """Turn any nonzero diagonal into the divisibility chain d_1 | d_2 | ...."""
    d = sorted(abs(int(x)) for x in diag if x)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = math.gcd(d[i], d[j])
            if g != d[i]:
                d[i], d[j] = g, d[i] * d[j] // g
    return sorted(d)


def _dense_diagonal(a: list[list[int]]) -> list[int]:
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            piv = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // piv
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // piv
                    if q:
                        for i in range(t, m):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        clean = False
            if clean:
                break
            # move the smallest remaining entry of row/col t into the pivot slot
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            _, i, j = min(cand)
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def elementary_divisors(matrix) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ... | d_r`` of an integer matrix (1s included)."""
    a = np.asarray(matrix)
    if a.size == 0:
        return []
    if a.shape[0] < a.shape[1]:
        a = a.T
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = defaultdict(set)
    for i in range(a.shape[0]):
        nz = np.flatnonzero(a[i])
        if nz.size:
            rows[i] = {int(j): int(a[i, j]) for j in nz}
            for j in nz:
                col_rows[int(j)].add(i)

    ones = 0
    progress = True
    while progress:
        progress = False
        for rid in sorted(rows, key=lambda r: len(rows[r])):
            row = rows.get(rid)
            if row is None:
                continue
            units = [c for c, v in row.items() if v in (1, -1)]
            if not units:
                continue
            c = min(units, key=lambda col: len(col_rows[col]))
            u = row[c]
            for sid in list(col_rows[c]):
                if sid == rid:
                    continue
                srow = rows[sid]
                f = srow[c] * u
                for col, v in row.items():
                    nv = srow.get(col, 0) - f * v
                    if nv:
                        if col not in srow:
                            col_rows[col].add(sid)
                        srow[col] = nv
                    elif col in srow:
                        del srow[col]
                        col_rows[col].discard(sid)
                if not srow:
                    del rows[sid]
            for col in row:
                col_rows[col].discard(rid)
            del col_rows[c]
            del rows[rid]
            ones += 1
            progress = True

    rest: list[int] = []
    if rows:
        cols = sorted({c for r in rows.values() for c in r})
        cidx = {c: k for k, c in enumerate(cols)}
        dense = []
        for r in rows.values():
            line = [0] * len(cols)
            for c, v in r.items():
                line[cidx[c]] = v
            dense.append(line)
        rest = _dense_diagonal(dense)
    return [1] * ones + invariant_factors_from_diagonal(rest)
