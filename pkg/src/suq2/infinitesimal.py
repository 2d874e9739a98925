"""Infinitesimal systems {A0, A1, A2} in floating point.

The canonical irreducible system of dimension n + 1 lives on the weight
string xi_k, k = -n, -n+2, ..., n.  Two readings of the ladder coefficients
are available; ``inf_build`` tries them in order and keeps the first that
satisfies the relations, recording which one in ``convention``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence

import numpy as np

CONVENTIONS = ("literal", "half-index")
RELATIONS = ("1a", "1b", "1c", "2a", "2b")


@dataclass(frozen=True)
class InfSystem:
    dim: int
    A0: np.ndarray
    A1: np.ndarray
    A2: np.ndarray
    q0: float
    convention: str = "given"
    report: Dict[str, float] = field(default_factory=dict, compare=False)

    @property
    def mats(self):
        return (self.A0, self.A1, self.A2)


def c_coeff(k: int, n: int, q: float) -> float:
    rad = (q ** (-k) - q**n) * (q ** (-n) - q ** (2 - k))
    if rad < 0:
        # only reached off the string, where a tiny negative means zero
        if rad > -1e-12:
            rad = 0.0
        else:
            raise ValueError(f"negative radicand for c_{k} (n={n}, q={q})")
    return math.sqrt(rad) / (q**-2 - 1)


def d_coeff(k: int, q: float) -> float:
    return (q ** (-2 * k) - 1) / (q**-2 - 1)


def _weights(n: int):
    return list(range(-n, n + 1, 2))


def _system(n: int, q: float, convention: str) -> InfSystem:
    w = _weights(n)
    d = n + 1
    A0 = np.zeros((d, d), dtype=complex)
    A1 = np.zeros((d, d), dtype=complex)
    A2 = np.zeros((d, d), dtype=complex)
    for i, k in enumerate(w):
        A1[i, i] = d_coeff(k, q)
        if i + 1 < d:
            # A0 xi_k is a multiple of xi_(k+2)
            if convention == "literal":
                A0[i + 1, i] = -c_coeff(k + 1, n, q)
            else:
                A0[i + 1, i] = -c_coeff(k + 2, n, q) / q
        if i > 0:
            if convention == "literal":
                A2[i - 1, i] = -q * c_coeff(k, n, q)
            else:
                A2[i - 1, i] = c_coeff(k, n, q)
    return InfSystem(d, A0, A1, A2, q, convention)


def _relation_terms(S: InfSystem):
    A0, A1, A2 = S.mats
    q = S.q0
    return {
        "1a": (q * A2 @ A0, -A0 @ A2 / q, -A1),
        "1b": (q**2 * A1 @ A0, -A0 @ A1 / q**2, -(1 + q**2) * A0),
        "1c": (q**2 * A2 @ A1, -A1 @ A2 / q**2, -(1 + q**2) * A2),
        "2a": (-q * A0.conj().T, -A2),
        "2b": (A1.conj().T, -A1),
    }


def _maxabs(M) -> float:
    return float(np.max(np.abs(M))) if M.size else 0.0


def residuals(S: InfSystem) -> Dict[str, float]:
    """Max-norm of each relation's left side minus right side."""
    return {name: _maxabs(sum(terms)) for name, terms in _relation_terms(S).items()}


def relative_residuals(S: InfSystem) -> Dict[str, float]:
    """Residuals divided by the largest term in each relation (diagnostic only)."""
    out = {}
    for name, terms in _relation_terms(S).items():
        scale = max(1.0, max(_maxabs(t) for t in terms))
        out[name] = _maxabs(sum(terms)) / scale
    return out


def inf_verify(S: InfSystem, tol: float = 1e-9) -> Dict[str, object]:
    res = residuals(S)
    return {
        "residuals": res,
        "relative": relative_residuals(S),
        "tol": tol,
        "pass": all(v <= tol for v in res.values()),
    }


def inf_build(n: int, q0: float, tol: float = 1e-9) -> InfSystem:
    """Canonical system; the first convention within ``tol`` wins, else the best one."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    systems = {}
    tried = {}
    for conv in CONVENTIONS:
        systems[conv] = _system(n, q0, conv)
        tried[conv] = max(residuals(systems[conv]).values())
        if tried[conv] <= tol:
            break
    best = min(tried, key=tried.get)
    report = {f"max_residual[{c}]": v for c, v in tried.items()}
    report["within_tol"] = float(tried[best] <= tol)
    S = systems[best]
    return InfSystem(S.dim, S.A0, S.A1, S.A2, q0, best, report)


def from_matrices(mats: Sequence, q0: float) -> InfSystem:
    A0, A1, A2 = (np.asarray(M, dtype=complex) for M in mats)
    return InfSystem(A0.shape[0], A0, A1, A2, q0)


def _nullspace(M: np.ndarray, tol: float) -> np.ndarray:
    if M.shape[0] == 0:
        return np.eye(M.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(M)
    scale = max(1.0, float(s[0])) if s.size else 1.0
    rank = int(np.sum(s > tol * scale))
    return vh[rank:].conj().T


def _intertwiner_equations(left: Sequence[np.ndarray], right: Sequence[np.ndarray]) -> np.ndarray:
    # vec(A X - X B) = (I kron A - B^T kron I) vec(X), column stacking
    n = left[0].shape[0]
    m = right[0].shape[0]
    blocks = [np.kron(np.eye(m), A) - np.kron(B.T, np.eye(n)) for A, B in zip(left, right)]
    return np.vstack(blocks)


def intertwiner_basis(S: InfSystem, T: InfSystem, tol: float = 1e-9):
    n, m = S.dim, T.dim
    N = _nullspace(_intertwiner_equations(S.mats, T.mats), tol)
    return [N[:, j].reshape((n, m), order="F") for j in range(N.shape[1])]


def commutant_dim(S: InfSystem, tol: float = 1e-9) -> int:
    return len(intertwiner_basis(S, S, tol))


def inf_equivalent(S: InfSystem, T: InfSystem, tol: float = 1e-7, seed: int = 0) -> Optional[np.ndarray]:
    """An invertible X with A_k^S X = X A_k^T for all k, or None."""
    if S.dim != T.dim:
        return None
    if abs(S.q0 - T.q0) > 1e-15:
        raise ValueError("systems are at different q0")
    basis = intertwiner_basis(S, T, tol)
    if not basis:
        return None
    rng = np.random.default_rng(seed)
    candidates = list(basis)
    for _ in range(8):
        coeffs = rng.standard_normal(len(basis))
        candidates.append(sum(c * B for c, B in zip(coeffs, basis)))
    for X in candidates:
        X = X / np.max(np.abs(X))
        if np.linalg.cond(X) > 1.0 / tol:
            continue
        if intertwiner_residual(S, T, X) <= tol:
            return X
    return None


def intertwiner_residual(S: InfSystem, T: InfSystem, X: np.ndarray) -> float:
    return max(float(np.max(np.abs(A @ X - X @ B))) for A, B in zip(S.mats, T.mats))


def perturbed(S: InfSystem, which: int, i: int, j: int, delta: float) -> InfSystem:
    mats = [M.copy() for M in S.mats]
    mats[which][i, j] += delta
    return InfSystem(S.dim, *mats, q0=S.q0, convention=S.convention)


def corep_system(n: int, q0: float) -> InfSystem:
    """amatrices(U_n) evaluated in floating point at q0."""
    from .corep import amatrices, corep_build
    from .scalars import scalar_to_float

    mats = [[[scalar_to_float(x, q0) for x in row] for row in A] for A in amatrices(corep_build(n))]
    return from_matrices(mats, q0)


def residual_csv(ns: Iterable[int], qs: Iterable[float], tol: float = 1e-9) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["n", "q0", "convention", *RELATIONS, "pass"])
    for q in qs:
        for n in ns:
            S = inf_build(n, q, tol)
            rep = inf_verify(S, tol)
            w.writerow([n, q, S.convention, *(f"{rep['residuals'][r]:.3e}" for r in RELATIONS), rep["pass"]])
    return buf.getvalue()
