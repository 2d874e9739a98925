"""Exact linear algebra over the rationals (row reduction and nullspaces)."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

RatMatrix = List[List[Fraction]]


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[RatMatrix, List[int]]:
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> List[List[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


def commutant_dim(mats: Sequence[Sequence[Sequence[Fraction]]]) -> int:
    """Dimension of {T : M T = T M for every M in mats}."""
    return len(intertwiner_space(mats, mats))


def intertwiner_space(left: Sequence, right: Sequence) -> List[List[List[Fraction]]]:
    """Basis of {T : L_k T = T R_k for all k}, T of shape (len L_k) x (len R_k)."""
    n = len(left[0])
    m = len(right[0])
    rows = []
    for L, R in zip(left, right):
        # (L T - T R)[i][j] = sum_t L[i][t] T[t][j] - sum_t T[i][t] R[t][j]
        for i in range(n):
            for j in range(m):
                row = [Fraction(0)] * (n * m)
                for t in range(n):
                    if L[i][t]:
                        row[t * m + j] += Fraction(L[i][t])
                for t in range(m):
                    if R[t][j]:
                        row[i * m + t] -= Fraction(R[t][j])
                if any(row):
                    rows.append(row)
    vecs = nullspace(rows, n * m)
    return [[v[i * m:(i + 1) * m] for i in range(n)] for v in vecs]
