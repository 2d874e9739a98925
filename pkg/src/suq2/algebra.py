"""The *-algebra SU_q^0(2) in normal form.

Elements are finite linear combinations of the basis monomials

    A[k, n, m] = a^k c*^n c^m        (k >= 0)
    A[k, n, m] = a*^(-k) c*^n c^m    (k < 0)

where ``a`` is alpha and ``c`` is gamma.  Products are brought back to this
form with the defining commutation rules:

    a* a -> 1 - c* c          a a* -> 1 - q^2 c* c       c c* -> c* c
    c a  -> q^-1 a c          c* a -> q^-1 a c*
    c a* -> q a* c            c* a* -> q a* c*
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .scalars import ONE, ZERO, Scalar, as_scalar, qpow

BasisIndex = Tuple[int, int, int]

A_GEN = "a"
AS_GEN = "a*"
C_GEN = "c"
CS_GEN = "c*"
GENERATORS = (A_GEN, AS_GEN, C_GEN, CS_GEN)

_GEN_INDEX = {A_GEN: (1, 0, 0), AS_GEN: (-1, 0, 0), CS_GEN: (0, 1, 0), C_GEN: (0, 0, 1)}
_STAR = {A_GEN: AS_GEN, AS_GEN: A_GEN, C_GEN: CS_GEN, CS_GEN: C_GEN}


class AlgebraElement:
    """Immutable normal-form element: a map from basis index to nonzero Scalar."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[BasisIndex, object] | None = None):
        clean = {}
        if terms:
            for idx, c in terms.items():
                c = as_scalar(c)
                if c:
                    clean[_check_index(idx)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[BasisIndex, Scalar]) -> "AlgebraElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, k: int, n: int = 0, m: int = 0, coeff=ONE) -> "AlgebraElement":
        return cls({(k, n, m): coeff})

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        return cls({(0, 0, 0): c})

    @property
    def terms(self) -> Dict[BasisIndex, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[BasisIndex, Scalar]]:
        """Terms in (k, n, m)-lexicographic order."""
        return iter(sorted(self._terms.items()))

    def coeff(self, k: int, n: int = 0, m: int = 0) -> Scalar:
        return self._terms.get((k, n, m), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(idx == (0, 0, 0) for idx in self._terms)

    def scalar_part(self) -> Scalar:
        return self._terms.get((0, 0, 0), ZERO)

    def __len__(self):
        return len(self._terms)

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for idx, c in other._terms.items():
            v = out.get(idx)
            v = c if v is None else v + c
            if v:
                out[idx] = v
            else:
                out.pop(idx, None)
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({i: -c for i, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other):
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers do not exist in the algebra")
        out = ONE_ELT
        for _ in range(e):
            out = out * self
        return out

    def scale(self, s) -> "AlgebraElement":
        s = as_scalar(s)
        if not s:
            return ZERO_ELT
        return AlgebraElement._raw({i: c * s for i, c in self._terms.items()})

    def adjoint(self) -> "AlgebraElement":
        return alg_adjoint(self)

    star = adjoint

    # --------------------------------------------------------------- equality
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"AlgebraElement({render_element(self)!r})"

    def __str__(self):
        return render_element(self)


def _check_index(idx) -> BasisIndex:
    k, n, m = idx
    if n < 0 or m < 0:
        raise ValueError(f"invalid basis index {idx}")
    return (int(k), int(n), int(m))


def _scalar_or_none(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int) or type(x).__name__ == "Fraction":
        return as_scalar(x)
    return None


def _coerce(x):
    if isinstance(x, AlgebraElement):
        return x
    s = _scalar_or_none(x)
    if s is None:
        return NotImplemented
    return AlgebraElement.scalar(s)


ZERO_ELT = AlgebraElement()
ONE_ELT = AlgebraElement({(0, 0, 0): ONE})
ALPHA = AlgebraElement.basis(1)
ALPHA_STAR = AlgebraElement.basis(-1)
GAMMA = AlgebraElement.basis(0, 0, 1)
GAMMA_STAR = AlgebraElement.basis(0, 1, 0)


def generator(name: str) -> AlgebraElement:
    return AlgebraElement({_GEN_INDEX[name]: ONE})


# ------------------------------------------------------------------ products
@lru_cache(maxsize=None)
def _alpha_prod(k1: int, k2: int) -> Tuple[Tuple[int, int, Scalar], ...]:
    """Normal form of (alpha-power k1)(alpha-power k2) as (k, i, coeff): coeff a^k (c*c)^i."""
    if k1 >= 0 and k2 >= 0 or k1 <= 0 and k2 <= 0:
        return ((k1 + k2, 0, ONE),)
    if k1 > 0:
        # a^a a*^b = a^(a-b) prod_{i<min} (1 - q^(2(b-i)) c*c)
        a, b = k1, -k2
        factors = [qpow(2 * (b - i), -1) for i in range(min(a, b))]
    else:
        # a*^b a^a = a^(a-b) prod_{i<min} (1 - q^(-2(a-1-i)) c*c)
        b, a = -k1, k2
        factors = [qpow(-2 * (a - 1 - i), -1) for i in range(min(a, b))]
    poly = [ONE]
    for f in factors:
        nxt = poly + [ZERO]
        for i, c in enumerate(poly):
            nxt[i + 1] = nxt[i + 1] + c * f
        poly = nxt
    k = k1 + k2
    return tuple((k, i, c) for i, c in enumerate(poly) if c)


@lru_cache(maxsize=None)
def mono_mul(x: BasisIndex, y: BasisIndex) -> Tuple[Tuple[BasisIndex, Scalar], ...]:
    """Normal form of A[x] * A[y] as a tuple of (index, coeff)."""
    k1, n1, m1 = x
    k2, n2, m2 = y
    # moving c*^n1 c^m1 past an alpha-power of signed length k2 costs q^(-k2 (n1+m1))
    shift = qpow(-k2 * (n1 + m1))
    out = []
    for k, i, c in _alpha_prod(k1, k2):
        out.append(((k, n1 + n2 + i, m1 + m2 + i), c * shift))
    return tuple(out)


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    out: Dict[BasisIndex, Scalar] = {}
    for i1, c1 in x._terms.items():
        for i2, c2 in y._terms.items():
            c12 = c1 * c2
            for idx, c in mono_mul(i1, i2):
                v = out.get(idx)
                out[idx] = c12 * c if v is None else v + c12 * c
    return AlgebraElement._raw({i: c for i, c in out.items() if c})


def basis_element(idx: BasisIndex) -> AlgebraElement:
    return AlgebraElement._raw({idx: ONE})


@lru_cache(maxsize=None)
def _mono_adjoint(idx: BasisIndex) -> AlgebraElement:
    k, n, m = idx
    # (a^k c*^n c^m)* = c*^m c^n a*^k
    return alg_mul(basis_element((0, m, n)), basis_element((-k, 0, 0)))


def alg_adjoint(x: AlgebraElement) -> AlgebraElement:
    """Antimultiplicative involution; coefficients are real so are left unchanged."""
    out = ZERO_ELT
    for idx, c in x._terms.items():
        out = out + _mono_adjoint(idx).scale(c)
    return out


# ---------------------------------------------------------- word rewriting
Word = Tuple[str, ...]

# (left, right) -> list of (coeff, replacement word)
REWRITE_RULES: Dict[Tuple[str, str], Tuple[Tuple[Scalar, Word], ...]] = {
    (AS_GEN, A_GEN): ((ONE, ()), (-ONE, (CS_GEN, C_GEN))),
    (A_GEN, AS_GEN): ((ONE, ()), (qpow(2, -1), (CS_GEN, C_GEN))),
    (C_GEN, CS_GEN): ((ONE, (CS_GEN, C_GEN)),),
    (C_GEN, A_GEN): ((qpow(-1), (A_GEN, C_GEN)),),
    (CS_GEN, A_GEN): ((qpow(-1), (A_GEN, CS_GEN)),),
    (C_GEN, AS_GEN): ((qpow(1), (AS_GEN, C_GEN)),),
    (CS_GEN, AS_GEN): ((qpow(1), (AS_GEN, CS_GEN)),),
}


def _redex_positions(word: Word) -> List[int]:
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in REWRITE_RULES]


def _word_index(word: Word) -> BasisIndex:
    k = n = m = 0
    for g in word:
        dk, dn, dm = _GEN_INDEX[g]
        k += dk
        n += dn
        m += dm
    return (k, n, m)


def normalize_word(word: Sequence[str], coeff=ONE, order: str = "left") -> AlgebraElement:
    """Rewrite a generator word to normal form by the seven rules.

    ``order`` picks the redex: ``"left"`` rewrites the leftmost reducible
    pair first, ``"right"`` the rightmost.  Both terminate on the same
    normal form.
    """
    for g in word:
        if g not in _GEN_INDEX:
            raise ValueError(f"unknown generator {g!r}")
    if order not in ("left", "right"):
        raise ValueError("order must be 'left' or 'right'")
    pending: Dict[Word, Scalar] = {tuple(word): as_scalar(coeff)}
    done: Dict[BasisIndex, Scalar] = {}
    while pending:
        w, c = pending.popitem()
        if not c:
            continue
        pos = _redex_positions(w)
        if not pos:
            idx = _word_index(w)
            done[idx] = done.get(idx, ZERO) + c
            continue
        i = pos[0] if order == "left" else pos[-1]
        for rc, rep in REWRITE_RULES[(w[i], w[i + 1])]:
            nw = w[:i] + rep + w[i + 2 :]
            pending[nw] = pending.get(nw, ZERO) + c * rc
    return AlgebraElement(done)


def index_word(idx: BasisIndex) -> Word:
    k, n, m = idx
    a = (A_GEN,) * k if k >= 0 else (AS_GEN,) * (-k)
    return a + (CS_GEN,) * n + (C_GEN,) * m


# ---------------------------------------------------------------- tensors
class TensorElement:
    """Element of the algebraic tensor power; keys are tuples of basis indices."""

    __slots__ = ("_terms", "arity")

    def __init__(self, terms: Mapping[Tuple[BasisIndex, ...], object] | None = None, arity: int = 2):
        clean = {}
        if terms:
            for key, c in terms.items():
                if len(key) != arity:
                    raise ValueError(f"tensor key {key} does not have arity {arity}")
                c = as_scalar(c)
                if c:
                    clean[tuple(_check_index(i) for i in key)] = c
        self._terms = clean
        self.arity = arity

    @classmethod
    def _raw(cls, terms, arity: int) -> "TensorElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.arity = arity
        return obj

    @classmethod
    def pure(cls, *factors: AlgebraElement) -> "TensorElement":
        """x1 (x) x2 (x) ... as a tensor element."""
        out = {}
        for combo in itertools.product(*(f._terms.items() for f in factors)):
            key = tuple(i for i, _ in combo)
            c = ONE
            for _, s in combo:
                c = c * s
            out[key] = out.get(key, ZERO) + c
        return cls._raw({k: v for k, v in out.items() if v}, len(factors))

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.arity != self.arity:
            raise ValueError("tensor arity mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key)
            v = c if v is None else v + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return TensorElement._raw(out, self.arity)

    def __neg__(self):
        return TensorElement._raw({k: -c for k, c in self._terms.items()}, self.arity)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other):
        s = _scalar_or_none(other)
        if s is None:
            return NotImplemented
        return self.scale(s)

    def scale(self, s) -> "TensorElement":
        s = as_scalar(s)
        if not s:
            return TensorElement._raw({}, self.arity)
        return TensorElement._raw({k: c * s for k, c in self._terms.items()}, self.arity)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return False
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __repr__(self):
        parts = []
        for key, c in self.items():
            slots = " (x) ".join(render_monomial(i) for i in key)
            parts.append(f"({c}) * {slots}")
        return "TensorElement(" + (" + ".join(parts) or "0") + ")"


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    """Slotwise product (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly."""
    if x.arity != y.arity:
        raise ValueError("tensor arity mismatch")
    out: Dict[Tuple[BasisIndex, ...], Scalar] = {}
    for kx, cx in x._terms.items():
        for ky, cy in y._terms.items():
            c0 = cx * cy
            slots = [mono_mul(a, b) for a, b in zip(kx, ky)]
            for combo in itertools.product(*slots):
                c = c0
                for _, s in combo:
                    c = c * s
                key = tuple(i for i, _ in combo)
                v = out.get(key)
                out[key] = c if v is None else v + c
    return TensorElement._raw({k: v for k, v in out.items() if v}, x.arity)


# ---------------------------------------------------------------- matrices
class AlgMatrix:
    """Dense rectangular matrix over the algebra."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[object]]):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.entries = tuple(tuple(_as_element(e) for e in r) for r in rows)
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "AlgMatrix":
        return cls([[ONE_ELT if i == j else ZERO_ELT for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __mul__(self, other: "AlgMatrix") -> "AlgMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = ZERO_ELT
                for t in range(self.cols):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return AlgMatrix(out)

    def __add__(self, other: "AlgMatrix") -> "AlgMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in matrix sum")
        return AlgMatrix(
            [[self.entries[i][j] + other.entries[i][j] for j in range(self.cols)] for i in range(self.rows)]
        )

    def adjoint_transpose(self) -> "AlgMatrix":
        return AlgMatrix([[alg_adjoint(self.entries[j][i]) for j in range(self.rows)] for i in range(self.cols)])

    def scale_rows(self, scalars: Sequence[Scalar]) -> "AlgMatrix":
        return AlgMatrix([[e.scale(s) for e in row] for row, s in zip(self.entries, scalars)])

    def scale_cols(self, scalars: Sequence[Scalar]) -> "AlgMatrix":
        return AlgMatrix([[e.scale(s) for e, s in zip(row, scalars)] for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, AlgMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"AlgMatrix([{body}])"


def _as_element(e) -> AlgebraElement:
    if isinstance(e, AlgebraElement):
        return e
    c = _coerce(e)
    if c is NotImplemented:
        raise TypeError(f"cannot use {e!r} as a matrix entry")
    return c


def mat_ops(A: AlgMatrix, B: AlgMatrix | None, op: str) -> AlgMatrix:
    if op == "mul":
        return A * B
    if op == "add":
        return A + B
    if op == "adjoint-transpose":
        return A.adjoint_transpose()
    raise ValueError(f"unknown matrix op {op!r}")


def fundamental_matrix(corner: Scalar | None = None) -> AlgMatrix:
    """[[a, -q c*], [c, a*]]; ``corner`` overrides the factor in front of c*."""
    corner = qpow(1) if corner is None else as_scalar(corner)
    return AlgMatrix([[ALPHA, GAMMA_STAR.scale(-corner)], [GAMMA, ALPHA_STAR]])


def check_fundamental_unitary(corner: Scalar | None = None) -> bool:
    U = fundamental_matrix(corner)
    I2 = AlgMatrix.identity(2)
    Ustar = U.adjoint_transpose()
    return U * Ustar == I2 and Ustar * U == I2


# --------------------------------------------------------------- rendering
def render_monomial(idx: BasisIndex) -> str:
    k, n, m = idx
    parts = []
    if k > 0:
        parts.append("a" if k == 1 else f"a^{k}")
    elif k < 0:
        parts.append("a*" if k == -1 else f"a*^{-k}")
    if n:
        parts.append("c*" if n == 1 else f"c*^{n}")
    if m:
        parts.append("c" if m == 1 else f"c^{m}")
    return " ".join(parts) if parts else "1"


def render_element(x: AlgebraElement) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for idx, c in x.items():
        if idx == (0, 0, 0):
            parts.append(f"({c})")
        else:
            parts.append(f"({c}) * {render_monomial(idx)}")
    return " + ".join(parts)


def element_to_json(x: AlgebraElement) -> List[dict]:
    out = []
    for (k, n, m), c in x.items():
        out.append({"k": k, "n": n, "m": m, "num": _poly_json(c.num), "den": _poly_json(c.den)})
    return out


def _poly_json(p) -> List[List[str]]:
    """Polynomial in u as [[u_exponent, "coeff"], ...]."""
    return [[e, str(c)] for e, c in p]


def element_from_json(records: Iterable[dict]) -> AlgebraElement:
    from fractions import Fraction

    terms = {}
    for r in records:
        num = tuple((int(e), Fraction(c)) for e, c in r["num"])
        den = tuple((int(e), Fraction(c)) for e, c in r["den"])
        terms[(r["k"], r["n"], r["m"])] = Scalar(num, den)
    return AlgebraElement(terms)
