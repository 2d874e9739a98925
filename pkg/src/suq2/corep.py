"""Finite-dimensional corepresentations: U_n, sums, tensors, A-matrices and weights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .algebra import (
    ZERO_ELT,
    AlgebraElement,
    AlgMatrix,
    BasisIndex,
    TensorElement,
    alg_mul,
    element_to_json,
    fundamental_matrix,
    render_element,
)
from .dual import CHI, func_eval
from .hopf import antipode, counit, delta, delta_basis
from .linalg import intertwiner_space
from .scalars import ONE, ZERO, Scalar, qpow, scalar_eval

ScalarMatrix = List[List[Scalar]]
WeightFunction = Dict[int, int]


class CorepError(ValueError):
    pass


@dataclass(frozen=True)
class Corep:
    dim: int
    entries: AlgMatrix
    basis_labels: Tuple

    def __post_init__(self):
        if self.entries.rows != self.dim or self.entries.cols != self.dim:
            raise CorepError("entry matrix does not match dim")

    def __getitem__(self, jk) -> AlgebraElement:
        return self.entries[jk]

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "basis": [list(b) if isinstance(b, tuple) else b for b in self.basis_labels],
            "entries": [[element_to_json(e) for e in row] for row in self.entries.entries],
        }

    def render(self) -> str:
        lines = [f"dim {self.dim}"]
        for j in range(self.dim):
            for k in range(self.dim):
                lines.append(f"u[{j},{k}] = {render_element(self.entries[j, k])}")
        return "\n".join(lines)


# ------------------------------------------------------------------ build
def vn_basis(n: int) -> Tuple[BasisIndex, ...]:
    """a^k c*^(n-k) for k = 0..n."""
    return tuple((k, n - k, 0) for k in range(n + 1))


def corep_build(n: int) -> Corep:
    """Read U_n off Delta(a^k c*^(n-k)) = sum_j a^j c*^(n-j) (x) u[j,k]."""
    if n < 0:
        raise CorepError("n must be non-negative")
    labels = vn_basis(n)
    pos = {lab: j for j, lab in enumerate(labels)}
    cols: List[List[AlgebraElement]] = []
    for lab in labels:
        col: Dict[int, Dict[BasisIndex, Scalar]] = {}
        for (left, right), c in delta_basis(lab).terms.items():
            if left not in pos:
                raise AssertionError(f"Delta(V_{n}) left leg {left} outside V_{n}")
            slot = col.setdefault(pos[left], {})
            slot[right] = slot.get(right, ZERO) + c
        cols.append([AlgebraElement(col.get(j, {})) for j in range(n + 1)])
    entries = [[cols[k][j] for k in range(n + 1)] for j in range(n + 1)]
    return Corep(n + 1, AlgMatrix(entries), labels)


def _apply_entrywise(M: AlgMatrix, fn) -> AlgMatrix:
    return AlgMatrix([[fn(e) for e in row] for row in M.entries])


def corep_check(U: Corep) -> Dict[str, bool]:
    d = U.dim
    corep_eq = True
    for j in range(d):
        for k in range(d):
            rhs = TensorElement(arity=2)
            for m in range(d):
                if U[j, m].is_zero() or U[m, k].is_zero():
                    continue
                rhs = rhs + TensorElement.pure(U[j, m], U[m, k])
            if delta(U[j, k]) != rhs:
                corep_eq = False
                break
        if not corep_eq:
            break
    SU = _apply_entrywise(U.entries, antipode)
    ident = AlgMatrix.identity(d)
    antipode_inverse = U.entries * SU == ident and SU * U.entries == ident
    counit_unit = all(
        counit(U[j, k]) == (ONE if j == k else ZERO) for j in range(d) for k in range(d)
    )
    return {"corep_eq": corep_eq, "antipode_inverse": antipode_inverse, "counit_unit": counit_unit}


def corep_from_matrix(M: AlgMatrix, labels: Sequence | None = None) -> Corep:
    return Corep(M.rows, M, tuple(labels) if labels is not None else tuple(range(M.rows)))


def corep_dsum(U: Corep, V: Corep) -> Corep:
    d = U.dim + V.dim
    rows = [[ZERO_ELT] * d for _ in range(d)]
    for j in range(U.dim):
        for k in range(U.dim):
            rows[j][k] = U[j, k]
    for j in range(V.dim):
        for k in range(V.dim):
            rows[U.dim + j][U.dim + k] = V[j, k]
    labels = tuple(("L", b) for b in U.basis_labels) + tuple(("R", b) for b in V.basis_labels)
    return Corep(d, AlgMatrix(rows), labels)


def corep_tensor(U: Corep, V: Corep) -> Corep:
    """(U x V)[(i,k),(j,l)] = u[i,j] v[k,l]; row pairs ordered lexicographically."""
    pairs = [(i, k) for i in range(U.dim) for k in range(V.dim)]
    rows = []
    for i, k in pairs:
        rows.append([alg_mul(U[i, j], V[k, l]) for j, l in pairs])
    labels = tuple((U.basis_labels[i], V.basis_labels[k]) for i, k in pairs)
    return Corep(len(pairs), AlgMatrix(rows), labels)


# -------------------------------------------------------------- A-matrices
def amatrices(U: Corep) -> Tuple[ScalarMatrix, ScalarMatrix, ScalarMatrix]:
    return tuple(
        [[func_eval(chi, U[j, k]) for k in range(U.dim)] for j in range(U.dim)] for chi in CHI
    )


def smat_mul(A: ScalarMatrix, B: ScalarMatrix) -> ScalarMatrix:
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = ZERO
            for t in range(m):
                if A[i][t] and B[t][j]:
                    acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def _lin(*terms: Tuple[Scalar, ScalarMatrix]) -> ScalarMatrix:
    n = len(terms[0][1])
    m = len(terms[0][1][0])
    out = [[ZERO] * m for _ in range(n)]
    for c, M in terms:
        for i in range(n):
            for j in range(m):
                if M[i][j]:
                    out[i][j] = out[i][j] + c * M[i][j]
    return out


def _is_zero(M: ScalarMatrix) -> bool:
    return all(not x for row in M for x in row)


def _conj_transpose(M: ScalarMatrix) -> ScalarMatrix:
    # real coefficient field: the adjoint is the transpose
    return [list(col) for col in zip(*M)]


def amatrix_relations(A: Sequence[ScalarMatrix]) -> Dict[str, bool]:
    """The q-commutator relations (1a)-(1c) and the unitary-only pair (2a), (2b)."""
    A0, A1, A2 = A
    q, q2 = qpow(1), qpow(2)
    one_q2 = ONE + q2
    r1a = _lin((q, smat_mul(A2, A0)), (-qpow(-1), smat_mul(A0, A2)), (-ONE, A1))
    r1b = _lin((q2, smat_mul(A1, A0)), (-qpow(-2), smat_mul(A0, A1)), (-one_q2, A0))
    r1c = _lin((q2, smat_mul(A2, A1)), (-qpow(-2), smat_mul(A1, A2)), (-one_q2, A2))
    r2a = _lin((-q, _conj_transpose(A0)), (-ONE, A2))
    r2b = _lin((ONE, _conj_transpose(A1)), (-ONE, A1))
    return {
        "1a": _is_zero(r1a),
        "1b": _is_zero(r1b),
        "1c": _is_zero(r1c),
        "2a": _is_zero(r2a),
        "2b": _is_zero(r2b),
    }


def amatrix_closed_forms(n: int) -> Tuple[Dict[Tuple[int, int], Scalar], Dict[int, Scalar]]:
    """Predicted A0 subdiagonal and A1 diagonal of U_n."""
    q = qpow(1)
    sub = {}
    for k in range(n):
        sub[(k + 1, k)] = -qpow(n - k - 2) * (ONE - qpow(-2 * (n - k))) / (ONE - qpow(-2))
    diag = {k: qpow(2) * (qpow(2 * (n - 2 * k)) - ONE) / (ONE - q * q) for k in range(n + 1)}
    return sub, diag


def check_amatrix_closed_forms(n: int) -> Dict[str, bool]:
    A0, A1, A2 = amatrices(corep_build(n))
    sub, diag = amatrix_closed_forms(n)
    d = n + 1
    a0_ok = all(A0[i][j] == sub.get((i, j), ZERO) for i in range(d) for j in range(d))
    a1_ok = all(A1[i][j] == (diag[i] if i == j else ZERO) for i in range(d) for j in range(d))
    a2_support = all(
        (not A2[i][j]) if j != i + 1 else bool(A2[i][j]) for i in range(d) for j in range(d)
    )
    separated = len(set(diag.values())) == d
    return {"a0_subdiagonal": a0_ok, "a1_diagonal": a1_ok, "a2_superdiagonal": a2_support,
            "a1_separates": separated}


# ----------------------------------------------------------------- weights
def _pi_matrix(U: Corep) -> Dict[int, ScalarMatrix]:
    d = U.dim
    coeffs: Dict[int, ScalarMatrix] = {}
    for j in range(d):
        for k in range(d):
            for (a, n, m), c in U[j, k].terms.items():
                if n == 0 and m == 0:
                    P = coeffs.setdefault(a, [[ZERO] * d for _ in range(d)])
                    P[j][k] = P[j][k] + c
    return {a: P for a, P in coeffs.items() if not _is_zero(P)}


def corep_weights(U: Corep) -> WeightFunction:
    """k -> trace P_k where (I (x) pi) U = sum_k P_k z^k."""
    P = _pi_matrix(U)
    d = U.dim
    total = [[ZERO] * d for _ in range(d)]
    for k, Pk in P.items():
        for k2, Pl in P.items():
            prod = smat_mul(Pk, Pl)
            if k == k2:
                if prod != Pk:
                    raise CorepError(f"P_{k} is not idempotent")
            elif not _is_zero(prod):
                raise CorepError(f"P_{k} P_{k2} != 0")
        total = _lin((ONE, total), (ONE, Pk))
    if total != [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]:
        raise CorepError("spectral projections do not sum to the identity")
    out: WeightFunction = {}
    for k, Pk in P.items():
        tr = ZERO
        for i in range(d):
            tr = tr + Pk[i][i]
        if not tr.is_rational() or tr.to_rational().denominator != 1:
            raise CorepError(f"trace of P_{k} is not an integer: {tr}")
        out[k] = int(tr.to_rational())
    return dict(sorted(out.items()))


def irreducible_weights(n: int) -> WeightFunction:
    """M_(n): one on -n, -n+2, ..., n."""
    return {k: 1 for k in range(-n, n + 1, 2)}


def weight_ops(M: WeightFunction, N: WeightFunction, op: str) -> WeightFunction:
    out: Dict[int, int] = {}
    if op == "dsum":
        for W in (M, N):
            for k, v in W.items():
                out[k] = out.get(k, 0) + v
    elif op == "tensor":
        for a, x in M.items():
            for b, y in N.items():
                out[a + b] = out.get(a + b, 0) + x * y
    else:
        raise ValueError(f"unknown weight op {op!r}")
    return {k: v for k, v in sorted(out.items()) if v}


def _clean(M) -> WeightFunction:
    out = {}
    for k, v in M.items():
        if v < 0:
            raise CorepError(f"negative multiplicity {v} at weight {k}")
        if v:
            out[int(k)] = int(v)
    return out


def decompose_greedy(M: WeightFunction) -> Dict[int, int]:
    rest = _clean(M)
    out: Dict[int, int] = {}
    while rest:
        top = max(rest)
        if top < 0:
            raise CorepError("weights are not symmetric: top weight is negative")
        mult = rest[top]
        out[top] = mult
        for k in range(-top, top + 1, 2):
            v = rest.get(k, 0) - mult
            if v < 0:
                raise CorepError(f"not a representation weight function (weight {k} goes negative)")
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    return dict(sorted(out.items(), reverse=True))


def decompose_sin(M: WeightFunction) -> Dict[int, int]:
    """Expand (z - 1/z) M(z) in the basis z^(n+1) - z^-(n+1)."""
    M = _clean(M)
    prod: Dict[int, int] = {}
    for k, v in M.items():
        prod[k + 1] = prod.get(k + 1, 0) + v
        prod[k - 1] = prod.get(k - 1, 0) - v
    prod = {p: c for p, c in prod.items() if c}
    out: Dict[int, int] = {}
    # each basis vector owns exactly one positive power, so the solve is diagonal
    for p in sorted(prod, reverse=True):
        if p <= 0:
            break
        out[p - 1] = prod[p]
    recon: Dict[int, int] = {}
    for n, c in out.items():
        recon[n + 1] = recon.get(n + 1, 0) + c
        recon[-(n + 1)] = recon.get(-(n + 1), 0) - c
    if recon != prod:
        raise CorepError("not a representation weight function (antisymmetry fails)")
    if any(c < 0 for c in out.values()):
        raise CorepError("not a representation weight function (negative multiplicity)")
    return dict(sorted(out.items(), reverse=True))


def weight_decompose(M: WeightFunction) -> Dict[int, int]:
    """Multiplicity of each U_n; two independent methods, asserted equal."""
    g = decompose_greedy(M)
    s = decompose_sin(M)
    if g != s:
        raise AssertionError(f"greedy {g} and sin-basis {s} disagree")
    return g


# ------------------------------------------------------------ intertwiners
def eval_matrix(A: ScalarMatrix, q0) -> List[List[Fraction]]:
    return [[scalar_eval(x, q0) for x in row] for row in A]


def intertwiners(U: Corep, V: Corep, q0=Fraction(1, 2)) -> List[List[List[Fraction]]]:
    """Basis of {T : A_k^U T = T A_k^V, k = 0, 1, 2} at q = q0."""
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    left = [eval_matrix(A, q0) for A in amatrices(U)]
    right = [eval_matrix(A, q0) for A in amatrices(V)]
    return intertwiner_space(left, right)


def irreducible(U: Corep, q0=Fraction(1, 2)) -> bool:
    return len(intertwiners(U, U, q0)) == 1


# ---------------------------------------------------------- unitarization
def _reverse(M: AlgMatrix) -> AlgMatrix:
    return AlgMatrix([list(reversed(row)) for row in reversed(M.entries)])


def u1_unitarization() -> Dict[str, bool]:
    """diag(q^-1/2, -q^1/2) F diag(q^1/2, -q^-1/2) is U_1 in the reversed basis (a, c*)."""
    left = [Scalar.upow(-1), Scalar.upow(1, -1)]
    right = [Scalar.upow(1), Scalar.upow(-1, -1)]
    F = fundamental_matrix()
    U1 = _reverse(corep_build(1).entries)
    conj = F.scale_rows(left).scale_cols(right)
    back = U1.scale_rows([x.inverse() for x in left]).scale_cols([x.inverse() for x in right])
    ident = AlgMatrix.identity(2)
    U1s = U1.adjoint_transpose()
    Fs = F.adjoint_transpose()
    return {
        "conjugate_is_u1": conj == U1,
        "u1_maps_to_fundamental": back == F,
        "fundamental_unitary": F * Fs == ident and Fs * F == ident,
        "u1_not_unitary": not (U1 * U1s == ident and U1s * U1 == ident),
    }


def fundamental_corep() -> Corep:
    """[[a, -q c*], [c, a*]] as a corepresentation."""
    return corep_from_matrix(fundamental_matrix(), labels=("e0", "e1"))


def scalar_matrix_json(A: ScalarMatrix) -> List[List[str]]:
    return [[str(x) for x in row] for row in A]

