"""Integer irreducible representations of the sl2 triple (e, f, h) with [f, e] = h."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List

from .linalg import commutant_dim

IntMatrix = List[List[int]]


@dataclass(frozen=True)
class SL2Rep:
    n: int
    e: IntMatrix
    f: IntMatrix
    h: IntMatrix


def _zeros(d: int) -> IntMatrix:
    return [[0] * d for _ in range(d)]


def sl2_build(n: int) -> SL2Rep:
    """Basis w_0..w_n: e w_k = -(n-k+1) w_(k-1), f w_k = (k+1) w_(k+1), h w_k = (n-2k) w_k."""
    if n < 0:
        raise ValueError("n must be non-negative")
    d = n + 1
    e, f, h = _zeros(d), _zeros(d), _zeros(d)
    for k in range(d):
        if k >= 1:
            e[k - 1][k] = -(n - k + 1)
        if k + 1 <= n:
            f[k + 1][k] = k + 1
        h[k][k] = n - 2 * k
    return SL2Rep(n, e, f, h)


def imul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    d = len(A)
    return [[sum(A[i][t] * B[t][j] for t in range(d)) for j in range(d)] for i in range(d)]


def bracket(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    AB, BA = imul(A, B), imul(B, A)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(AB, BA)]


def _diag(vals: List[int]) -> IntMatrix:
    d = len(vals)
    return [[vals[i] if i == j else 0 for j in range(d)] for i in range(d)]


def _scale(c: int, A: IntMatrix) -> IntMatrix:
    return [[c * x for x in row] for row in A]


def sl2_verify(n: int) -> Dict[str, bool]:
    R = sl2_build(n)
    d = n + 1
    fe, ef = imul(R.f, R.e), imul(R.e, R.f)
    # both products are diagonal in the w-basis
    fe_ok = fe == _diag([-(n - k + 1) * k for k in range(d)])
    ef_ok = ef == _diag([-(n - k) * (k + 1) for k in range(d)])
    mats = [[[Fraction(x) for x in row] for row in M] for M in (R.e, R.f, R.h)]
    weights = sorted((R.h[k][k] for k in range(d)), reverse=True)
    return {
        "h_e": bracket(R.h, R.e) == _scale(2, R.e),
        "f_h": bracket(R.f, R.h) == _scale(2, R.f),
        "f_e": bracket(R.f, R.e) == R.h,
        "trace_h": sum(R.h[k][k] for k in range(d)) == 0,
        "fe_eigen": fe_ok,
        "ef_eigen": ef_ok,
        "irreducible": commutant_dim(mats) == 1,
        "weight_string": weights == list(range(n, -n - 1, -2)),
    }


def render_matrix(M: IntMatrix) -> str:
    width = max(len(str(x)) for row in M for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in M)
