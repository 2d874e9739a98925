"""Comultiplication, counit and antipode of SU_q^0(2), and checks of the Hopf axioms."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple

from .algebra import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELT,
    AlgebraElement,
    BasisIndex,
    TensorElement,
    alg_adjoint,
    alg_mul,
    basis_element,
    mono_mul,
    tensor_mul,
)
from .scalars import ONE, ZERO, Scalar, qpow

_I = (0, 0, 0)


def _gen_deltas() -> Dict[str, TensorElement]:
    q = qpow(1)
    d_alpha = TensorElement.pure(ALPHA, ALPHA) - TensorElement.pure(GAMMA_STAR, GAMMA).scale(q)
    d_gamma = TensorElement.pure(GAMMA, ALPHA) + TensorElement.pure(ALPHA_STAR, GAMMA)
    # adjoints, slot by slot (q is real)
    d_alpha_star = TensorElement.pure(ALPHA_STAR, ALPHA_STAR) - TensorElement.pure(GAMMA, GAMMA_STAR).scale(q)
    d_gamma_star = TensorElement.pure(GAMMA_STAR, ALPHA_STAR) + TensorElement.pure(ALPHA, GAMMA_STAR)
    return {"a": d_alpha, "a*": d_alpha_star, "c": d_gamma, "c*": d_gamma_star}


_GEN_DELTA = _gen_deltas()
_UNIT2 = TensorElement({(_I, _I): ONE})


@lru_cache(maxsize=None)
def _delta_power(gen: str, e: int) -> TensorElement:
    if e == 0:
        return _UNIT2
    return tensor_mul(_delta_power(gen, e - 1), _GEN_DELTA[gen])


@lru_cache(maxsize=None)
def delta_basis(idx: BasisIndex) -> TensorElement:
    """Delta(A[k, n, m]) = Delta(a)^k Delta(c*)^n Delta(c)^m."""
    k, n, m = idx
    a = _delta_power("a" if k >= 0 else "a*", abs(k))
    return tensor_mul(tensor_mul(a, _delta_power("c*", n)), _delta_power("c", m))


def delta(x: AlgebraElement) -> TensorElement:
    out = TensorElement(arity=2)
    for idx, c in x.terms.items():
        out = out + delta_basis(idx).scale(c)
    return out


def counit_basis(idx: BasisIndex) -> Scalar:
    _, n, m = idx
    return ONE if n == 0 and m == 0 else ZERO


def counit(x: AlgebraElement) -> Scalar:
    total = ZERO
    for idx, c in x.terms.items():
        if idx[1] == 0 and idx[2] == 0:
            total = total + c
    return total


@lru_cache(maxsize=None)
def antipode_basis(idx: BasisIndex) -> AlgebraElement:
    """S(a^k c*^n c^m) = S(c)^m S(c*)^n S(a)^k = (-q)^m (-q^-1)^n c*^n c^m a*^k."""
    k, n, m = idx
    coeff = qpow(m - n, (-1) ** (m + n))
    return alg_mul(basis_element((0, n, m)), basis_element((-k, 0, 0))).scale(coeff)


def antipode(x: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement()
    for idx, c in x.terms.items():
        out = out + antipode_basis(idx).scale(c)
    return out


# -------------------------------------------------------- slot operations
def apply_to_slot(t: TensorElement, slot: int, fn) -> TensorElement:
    """Apply a linear map basis-index -> TensorElement (arity j) to one slot; arity grows by j-1."""
    out: Dict[Tuple[BasisIndex, ...], Scalar] = {}
    new_arity = None
    for key, c in t.terms.items():
        img = fn(key[slot])
        new_arity = t.arity - 1 + img.arity
        for sub, s in img.terms.items():
            nk = key[:slot] + sub + key[slot + 1 :]
            out[nk] = out.get(nk, ZERO) + c * s
    if new_arity is None:
        new_arity = t.arity + 1
    return TensorElement({k: v for k, v in out.items() if v}, arity=new_arity)


def contract_slot(t: TensorElement, slot: int, fn) -> TensorElement | AlgebraElement:
    """Apply a linear functional basis-index -> Scalar to one slot."""
    out: Dict[Tuple[BasisIndex, ...], Scalar] = {}
    for key, c in t.terms.items():
        v = fn(key[slot])
        if v:
            nk = key[:slot] + key[slot + 1 :]
            out[nk] = out.get(nk, ZERO) + c * v
    if t.arity == 2:
        return AlgebraElement({k[0]: v for k, v in out.items()})
    return TensorElement({k: v for k, v in out.items() if v}, arity=t.arity - 1)


def multiply_slots(t: TensorElement, left_map=None, right_map=None) -> AlgebraElement:
    """m(L (x) R)(t) for linear maps given on basis indices (identity when None)."""
    out = AlgebraElement()
    for (i1, i2), c in t.terms.items():
        a = left_map(i1) if left_map else basis_element(i1)
        b = right_map(i2) if right_map else basis_element(i2)
        out = out + alg_mul(a, b).scale(c)
    return out


def _as_tensor1(idx: BasisIndex) -> TensorElement:
    return TensorElement({(idx,): ONE}, arity=1)


def _delta_slot(idx: BasisIndex) -> TensorElement:
    return delta_basis(idx)


def hopf_axiom_check(x: AlgebraElement) -> Dict[str, bool]:
    d = delta(x)
    coassoc = apply_to_slot(d, 0, _delta_slot) == apply_to_slot(d, 1, _delta_slot)
    counit_left = contract_slot(d, 0, counit_basis) == x
    # (I (x) eps) leaves the left slot
    counit_right = contract_slot(d, 1, counit_basis) == x
    eps = AlgebraElement.scalar(counit(x))
    antipode_left = multiply_slots(d, left_map=antipode_basis) == eps
    antipode_right = multiply_slots(d, right_map=antipode_basis) == eps
    s_square = antipode(alg_adjoint(antipode(alg_adjoint(x)))) == x
    return {
        "coassoc": coassoc,
        "counit_left": counit_left,
        "counit_right": counit_right,
        "antipode_left": antipode_left,
        "antipode_right": antipode_right,
        "s_square": s_square,
    }


def cocancel_witness(alpha_factor: Scalar | None = None) -> Dict[str, bool]:
    """The two explicit cocancellation identities in the tensor square.

    a (x) 1 = Delta(a)(1 (x) a*) + q^2 Delta(c*)(1 (x) c)
    c (x) 1 = Delta(c)(1 (x) a*) - q Delta(a*)(1 (x) c)

    ``alpha_factor`` replaces the q^2 in the first identity (negative controls).
    """
    q = qpow(1)
    qq = qpow(2) if alpha_factor is None else alpha_factor

    def one_x(y):
        return TensorElement.pure(ONE_ELT, y)

    lhs_a = TensorElement.pure(ALPHA, ONE_ELT)
    rhs_a = tensor_mul(delta(ALPHA), one_x(ALPHA_STAR)) + tensor_mul(delta(GAMMA_STAR), one_x(GAMMA)).scale(qq)
    lhs_c = TensorElement.pure(GAMMA, ONE_ELT)
    rhs_c = tensor_mul(delta(GAMMA), one_x(ALPHA_STAR)) - tensor_mul(delta(ALPHA_STAR), one_x(GAMMA)).scale(q)
    return {"alpha_identity": lhs_a == rhs_a, "gamma_identity": lhs_c == rhs_c}


def delta_is_homomorphism(x: AlgebraElement, y: AlgebraElement) -> bool:
    return delta(alg_mul(x, y)) == tensor_mul(delta(x), delta(y))


def mono_mul_element(x: BasisIndex, y: BasisIndex) -> AlgebraElement:
    return AlgebraElement(dict(mono_mul(x, y)))
