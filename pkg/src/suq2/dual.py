"""The dual convolution algebra built from the 4x4 point of SU_q^0(2).

The point sends a, a*, c, c* to upper-triangular 4x4 scalar matrices whose
only nonzero entries sit on the diagonal and the first row.  Reading off

    [[eps, chi0, chi1, chi2],
     [0,   f0,   0,    0   ],
     [0,   0,    f1,   0   ],
     [0,   0,    0,    f2  ]]

defines the seven named functionals.  Everything else (convolutions, the
dual involution, the bimodule Gamma and the derivation d) is derived from
them through Delta and S.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from .algebra import AlgebraElement, BasisIndex, alg_adjoint, alg_mul, basis_element
from .hopf import antipode, delta_basis
from .scalars import ONE, ZERO, Scalar, as_scalar, qpow

ScalarMatrix = Tuple[Tuple[Scalar, ...], ...]

NAMED = ("eps", "f0", "f1", "f2", "chi0", "chi1", "chi2")
_ENTRY = {"eps": (0, 0), "chi0": (0, 1), "chi1": (0, 2), "chi2": (0, 3), "f0": (1, 1), "f1": (2, 2), "f2": (3, 3)}


def _mat(rows) -> ScalarMatrix:
    return tuple(tuple(as_scalar(x) for x in r) for r in rows)


def mat_mul(A: ScalarMatrix, B: ScalarMatrix) -> ScalarMatrix:
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ZERO
            for t in range(k):
                a = A[i][t]
                if a:
                    b = B[t][j]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_identity(n: int) -> ScalarMatrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class M4Point:
    """Four 4x4 matrices satisfying the defining relations of SU_q^0(2)."""

    a: ScalarMatrix
    a_star: ScalarMatrix
    c: ScalarMatrix
    c_star: ScalarMatrix

    @classmethod
    def standard(cls) -> "M4Point":
        q = qpow
        z = ZERO
        return cls(
            a=_mat([[1, z, 1, z], [z, q(-1), z, z], [z, z, q(-2), z], [z, z, z, q(-1)]]),
            a_star=_mat([[1, z, q(2, -1), z], [z, q(1), z, z], [z, z, q(2), z], [z, z, z, q(1)]]),
            c=_mat([[z, z, z, q(1, -1)], [z] * 4, [z] * 4, [z] * 4]),
            c_star=_mat([[z, q(-1, -1), z, z], [z] * 4, [z] * 4, [z] * 4]),
        )

    def relations_hold(self) -> bool:
        """The seven point relations, checked exactly."""
        a, as_, c, cs = self.a, self.a_star, self.c, self.c_star
        I = mat_identity(4)
        q = qpow(1)

        def add(X, Y, s=ONE):
            return tuple(tuple(x + s * y for x, y in zip(rx, ry)) for rx, ry in zip(X, Y))

        def sc(X, s):
            return tuple(tuple(x * s for x in r) for r in X)

        m = mat_mul
        return all(
            [
                add(m(as_, a), m(cs, c)) == I,
                add(m(a, as_), m(cs, c), qpow(2)) == I,
                m(cs, c) == m(c, cs),
                m(a, c) == sc(m(c, a), q),
                m(a, cs) == sc(m(cs, a), q),
                m(cs, as_) == sc(m(as_, cs), q),
                m(c, as_) == sc(m(as_, c), q),
            ]
        )


POINT = M4Point.standard()


@lru_cache(maxsize=None)
def _point_power(gen: str, e: int) -> ScalarMatrix:
    if e == 0:
        return mat_identity(4)
    base = {"a": POINT.a, "a*": POINT.a_star, "c": POINT.c, "c*": POINT.c_star}[gen]
    return mat_mul(_point_power(gen, e - 1), base)


@lru_cache(maxsize=None)
def m4_basis(idx: BasisIndex) -> ScalarMatrix:
    k, n, m = idx
    A = _point_power("a" if k >= 0 else "a*", abs(k))
    return mat_mul(mat_mul(A, _point_power("c*", n)), _point_power("c", m))


def m4_eval(x: AlgebraElement) -> ScalarMatrix:
    out = [[ZERO] * 4 for _ in range(4)]
    for idx, c in x.terms.items():
        M = m4_basis(idx)
        for i in range(4):
            for j in range(4):
                if M[i][j]:
                    out[i][j] = out[i][j] + c * M[i][j]
    return tuple(tuple(r) for r in out)


# -------------------------------------------------------------- functionals
class Functional:
    """Linear functional on the algebra, built symbolically from the named ones."""

    def __mul__(self, other):
        if isinstance(other, Functional):
            return Conv(self, other)
        return Combo(((as_scalar(other), self),))

    def __rmul__(self, other):
        return Combo(((as_scalar(other), self),))

    def __add__(self, other):
        return Combo(((ONE, self), (ONE, other)))

    def __sub__(self, other):
        return Combo(((ONE, self), (-ONE, other)))

    def __neg__(self):
        return Combo(((-ONE, self),))

    def star(self) -> "Functional":
        return Star(self)

    def __call__(self, x: AlgebraElement) -> Scalar:
        return func_eval(self, x)


@dataclass(frozen=True)
class Named(Functional):
    name: str

    def __post_init__(self):
        if self.name not in _ENTRY:
            raise ValueError(f"unknown functional {self.name!r}")

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class Conv(Functional):
    left: Functional
    right: Functional

    def __repr__(self):
        return f"({self.left!r} * {self.right!r})"


@dataclass(frozen=True)
class Star(Functional):
    inner: Functional

    def __repr__(self):
        return f"{self.inner!r}^*"


@dataclass(frozen=True)
class Combo(Functional):
    terms: Tuple[Tuple[Scalar, Functional], ...]

    def __repr__(self):
        return " + ".join(f"({c})*{f!r}" for c, f in self.terms)


EPS = Named("eps")
F0, F1, F2 = Named("f0"), Named("f1"), Named("f2")
CHI0, CHI1, CHI2 = Named("chi0"), Named("chi1"), Named("chi2")
CHI = (CHI0, CHI1, CHI2)
F = (F0, F1, F2)


def functional(name: str) -> Functional:
    return Named(name)


def _conj(s: Scalar) -> Scalar:
    # coefficients live in a real field; kept as a hook for complex coefficients
    return s


@lru_cache(maxsize=None)
def eval_basis(F_: Functional, idx: BasisIndex) -> Scalar:
    if isinstance(F_, Named):
        i, j = _ENTRY[F_.name]
        return m4_basis(idx)[i][j]
    if isinstance(F_, Conv):
        total = ZERO
        for (l, r), c in delta_basis(idx).terms.items():
            lv = eval_basis(F_.left, l)
            if lv:
                rv = eval_basis(F_.right, r)
                if rv:
                    total = total + c * lv * rv
        return total
    if isinstance(F_, Star):
        return _conj(func_eval(F_.inner, alg_adjoint(antipode(basis_element(idx)))))
    if isinstance(F_, Combo):
        total = ZERO
        for c, g in F_.terms:
            total = total + c * eval_basis(g, idx)
        return total
    raise TypeError(f"not a functional: {F_!r}")


def func_eval(F_: Functional, x: AlgebraElement) -> Scalar:
    total = ZERO
    for idx, c in x.terms.items():
        v = eval_basis(F_, idx)
        if v:
            total = total + c * v
    return total


def conv_left(F_: Functional, x: AlgebraElement) -> AlgebraElement:
    """F * x = (I (x) F) Delta(x)."""
    out: Dict[BasisIndex, Scalar] = {}
    for idx, c in x.terms.items():
        for (l, r), s in delta_basis(idx).terms.items():
            v = eval_basis(F_, r)
            if v:
                out[l] = out.get(l, ZERO) + c * s * v
    return AlgebraElement(out)


def conv_right(x: AlgebraElement, F_: Functional) -> AlgebraElement:
    """x * F = (F (x) I) Delta(x)."""
    out: Dict[BasisIndex, Scalar] = {}
    for idx, c in x.terms.items():
        for (l, r), s in delta_basis(idx).terms.items():
            v = eval_basis(F_, l)
            if v:
                out[r] = out.get(r, ZERO) + c * s * v
    return AlgebraElement(out)


def basis_grid(bound: int, gamma_bound: int | None = None) -> List[BasisIndex]:
    """All (k, n, m) with |k| <= bound and n, m <= gamma_bound (default: bound)."""
    g = bound if gamma_bound is None else gamma_bound
    return [(k, n, m) for k in range(-bound, bound + 1) for n in range(g + 1) for m in range(g + 1)]


def functionals_equal(F_: Functional, G_: Functional, grid: Sequence[BasisIndex]) -> bool:
    return all(eval_basis(F_, idx) == eval_basis(G_, idx) for idx in grid)


def chi1_formula() -> Functional:
    """q^2/(1-q^2) (f1 - eps)."""
    q2 = qpow(2)
    return (q2 / (ONE - q2)) * (F1 - EPS)


def conprop_identities(b_factor: Scalar | None = None) -> Dict[str, Tuple[Functional, Functional]]:
    """The convolution identities as (lhs, rhs) pairs; ``b_factor`` replaces (1+q^2) in (4b)."""
    q = qpow
    one_q2 = ONE + q(2) if b_factor is None else as_scalar(b_factor)
    return {
        "1": (F0 * F0, F1),
        "2a": (q(1, -1) * CHI0.star(), CHI2),
        "2b": (CHI1.star(), CHI1),
        "3a": (CHI0 * F0, q(2) * (F0 * CHI0)),
        "3b": (q(2) * (CHI2 * F0), F0 * CHI2),
        "3c": (CHI0 * F1, q(4) * (F1 * CHI0)),
        "3d": (q(4) * (CHI2 * F1), F1 * CHI2),
        "3e": (F0 * CHI1, CHI1 * F0),
        "3f": (F1 * CHI1, CHI1 * F1),
        "4a": (q(1) * (CHI2 * CHI0) - q(-1) * (CHI0 * CHI2), CHI1),
        "4b": (q(2) * (CHI1 * CHI0) - q(-2) * (CHI0 * CHI1), one_q2 * CHI0),
        "4c": (q(2) * (CHI2 * CHI1) - q(-2) * (CHI1 * CHI2), (ONE + q(2)) * CHI2),
        "chi1_formula": (CHI1, chi1_formula()),
    }


def verify_conprop(bound: int = 3, gamma_bound: int | None = None, b_factor: Scalar | None = None,
                   only: Sequence[BasisIndex] | None = None) -> Dict[str, bool]:
    """Check every convolution identity on the basis grid (or on ``only``)."""
    grid = list(only) if only is not None else basis_grid(bound, gamma_bound)
    return {name: functionals_equal(l, r, grid) for name, (l, r) in conprop_identities(b_factor).items()}


def twisted_derivation_check(k: int, b: AlgebraElement, d: AlgebraElement) -> bool:
    """chi_k(bd) = eps(b) chi_k(d) + chi_k(b) f_k(d)."""
    chi, f = CHI[k], F[k]
    lhs = func_eval(chi, alg_mul(b, d))
    rhs = func_eval(EPS, b) * func_eval(chi, d) + func_eval(chi, b) * func_eval(f, d)
    return lhs == rhs


# ------------------------------------------------------- the bimodule Gamma
@dataclass(frozen=True)
class GammaElement:
    """b0 w0 + b1 w1 + b2 w2 in the free left module on w0, w1, w2."""

    parts: Tuple[AlgebraElement, AlgebraElement, AlgebraElement]

    @classmethod
    def of(cls, b0, b1, b2) -> "GammaElement":
        return cls((b0, b1, b2))

    def __add__(self, other: "GammaElement") -> "GammaElement":
        return GammaElement(tuple(x + y for x, y in zip(self.parts, other.parts)))

    def __sub__(self, other: "GammaElement") -> "GammaElement":
        return GammaElement(tuple(x - y for x, y in zip(self.parts, other.parts)))

    def lmul(self, b: AlgebraElement) -> "GammaElement":
        return GammaElement(tuple(alg_mul(b, x) for x in self.parts))

    def rmul(self, b: AlgebraElement) -> "GammaElement":
        return gamma_rmul(self, b)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.parts)


def gamma_rmul(g: GammaElement, b: AlgebraElement) -> GammaElement:
    """(sum b_k w_k) . b = sum b_k (f_k * b) w_k."""
    return GammaElement(tuple(alg_mul(bk, conv_left(F[k], b)) for k, bk in enumerate(g.parts)))


def dmap(x: AlgebraElement) -> GammaElement:
    return GammaElement(tuple(conv_left(CHI[k], x) for k in range(3)))


def leibniz_holds(x: AlgebraElement, y: AlgebraElement) -> bool:
    return dmap(alg_mul(x, y)) == dmap(y).lmul(x) + gamma_rmul(dmap(x), y)


def iterated_leibniz(k: int, factors: Sequence[AlgebraElement]) -> AlgebraElement:
    """chi_k * (c_0 ... c_r) = sum_l (c_0..c_{l-1}) (chi_k * c_l) (f_k * (c_{l+1}..c_r))."""
    out = AlgebraElement()
    one = AlgebraElement.scalar(ONE)
    for l, c in enumerate(factors):
        pre = one
        for x in factors[:l]:
            pre = alg_mul(pre, x)
        post = one
        for x in factors[l + 1:]:
            post = alg_mul(post, x)
        out = out + alg_mul(alg_mul(pre, conv_left(CHI[k], c)), conv_left(F[k], post))
    return out


# -------------------------------------------------------- reference tables
def _gen(name: str) -> AlgebraElement:
    from .algebra import generator

    return generator(name)


Printed = Union[Scalar, AlgebraElement]


def printed_tables() -> Dict[str, List[Tuple[str, str, Printed]]]:
    """The four tables as printed, row by row: (functional label, generator, value)."""
    q = qpow
    g = _gen
    return {
        "f_values": [
            ("f0", "a", q(-1)), ("f1", "a", q(-2)), ("f0", "a", q(-1)),
            ("f0", "c", ZERO), ("f1", "c", ZERO), ("f0", "c", ZERO),
            ("f0", "a*", q(1)), ("f1", "a*", q(2)), ("f0", "a*", q(1)),
            ("f0", "c*", ZERO), ("f1", "c*", ZERO), ("f0", "c*", ZERO),
        ],
        "chi_values": [
            ("chi0", "c*", q(-1, -1)), ("chi1", "a", ONE), ("chi1", "a*", q(2, -1)), ("chi2", "c", q(1, -1)),
        ],
        "chi_convolutions": [
            ("chi0", "a", AlgebraElement()), ("chi1", "a", g("a")), ("chi1", "a", g("c*").scale(q(2))),
            ("chi0", "c", AlgebraElement()), ("chi1", "c", g("c")), ("chi1", "c", g("a*").scale(q(1, -1))),
            ("chi0", "a*", g("c*")), ("chi1", "a*", g("a*").scale(q(2, -1))), ("chi1", "a*", AlgebraElement()),
            ("chi0", "c*", g("a").scale(q(-1, -1))), ("chi1", "c*", g("c*").scale(q(2, -1))),
            ("chi1", "c*", AlgebraElement()),
        ],
        "f_convolutions": [
            ("f0", "a", g("a").scale(q(-1))), ("f1", "a", g("a").scale(q(-2))),
            ("f0", "c", g("c").scale(q(-1))), ("f1", "c", g("c").scale(q(-2))),
            ("f0", "a*", g("a*").scale(q(1))), ("f1", "a*", g("a*").scale(q(2))),
            ("f0", "c*", g("c*").scale(q(1))), ("f1", "c*", g("c*").scale(q(2))),
        ],
    }


def regenerate_tables() -> Dict[str, List[dict]]:
    """Recompute every printed entry from the 4x4 point and list disagreements.

    Each mismatch names the functionals that would reproduce the printed
    value, which separates label slips from value errors.
    """
    report: Dict[str, List[dict]] = {}
    for table, rows in printed_tables().items():
        conv = table.endswith("convolutions")
        mismatches = []
        for label, gen, printed in rows:
            x = _gen(gen)
            if conv:
                computed = conv_left(Named(label), x)
                fits = [n for n in NAMED if conv_left(Named(n), x) == printed]
            else:
                computed = func_eval(Named(label), x)
                fits = [n for n in NAMED if func_eval(Named(n), x) == printed]
            if computed != printed:
                mismatches.append(
                    {"label": label, "generator": gen, "printed": str(printed), "computed": str(computed),
                     "matches": fits}
                )
        report[table] = mismatches
    return report


def all_named() -> List[Functional]:
    return [Named(n) for n in NAMED]

