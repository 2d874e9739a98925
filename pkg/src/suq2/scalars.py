"""Exact coefficient arithmetic in Q(u), with the deformation parameter q = u**2.

Every scalar in the kernel is a rational function of u with rational
coefficients.  Working in u rather than q keeps half-integer powers of q
(needed to conjugate the first corepresentation into unitary form) exact.

Polynomials are stored sparsely as tuples of ``(exponent, coefficient)``
pairs sorted by exponent.  Coefficients are ``int`` whenever integral and
``fractions.Fraction`` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

Rational = Fraction
Poly = Tuple[Tuple[int, Union[int, Fraction]], ...]

_ONE: Poly = ((0, 1),)


class ScalarError(ArithmeticError):
    """Raised for division by zero or an evaluation that cannot be done exactly."""


def _norm_coeff(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _from_dict(d: Dict[int, object]) -> Poly:
    return tuple(sorted((e, _norm_coeff(c)) for e, c in d.items() if c != 0))


def _p_add(a: Poly, b: Poly, sign: int = 1) -> Poly:
    d = dict(a)
    for e, c in b:
        d[e] = d.get(e, 0) + sign * c
    return _from_dict(d)


def _p_mul(a: Poly, b: Poly) -> Poly:
    if len(a) == 1 and len(b) == 1:
        (ea, ca), (eb, cb) = a[0], b[0]
        return ((ea + eb, _norm_coeff(ca * cb)),)
    d: Dict[int, object] = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            d[e] = d.get(e, 0) + ca * cb
    return _from_dict(d)


def _p_scale(a: Poly, c) -> Poly:
    if c == 1:
        return a
    return tuple((e, _norm_coeff(x * c)) for e, x in a)


def _p_shift(a: Poly, s: int) -> Poly:
    return tuple((e + s, c) for e, c in a)


def _p_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    if not b:
        raise ScalarError("polynomial division by zero")
    rem = dict(a)
    db, lb = b[-1]
    quot: Dict[int, object] = {}
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c = Fraction(rem[dr]) / lb
        s = dr - db
        quot[s] = c
        for e, x in b:
            v = rem.get(e + s, 0) - c * x
            if v == 0:
                rem.pop(e + s, None)
            else:
                rem[e + s] = v
    return _from_dict(quot), _from_dict(rem)


def _p_monic(a: Poly) -> Poly:
    lead = a[-1][1]
    if lead == 1:
        return a
    return _p_scale(a, Fraction(1) / Fraction(lead))


def _p_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        _, r = _p_divmod(a, b)
        a, b = b, r
    return _p_monic(a) if a else _ONE


def _p_eval(a: Poly, x) -> Fraction:
    return sum((Fraction(c) * x**e for e, c in a), Fraction(0))


class Scalar:
    """An element ``num/den`` of Q(u) in canonical form.

    Canonical means: ``num`` and ``den`` coprime, ``den`` monic, and zero is
    stored as ``0/1``.  Equal scalars therefore have identical fields, so
    ``==`` and ``hash`` are structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly = (), den: Poly = _ONE, _canonical: bool = False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den

    # ----------------------------------------------------------- constructors
    @classmethod
    def from_rational(cls, x) -> "Scalar":
        x = Fraction(x)
        if x == 0:
            return ZERO
        return cls(((0, _norm_coeff(x)),), _ONE, _canonical=True)

    @classmethod
    def upow(cls, e: int, coeff=1) -> "Scalar":
        """``coeff * u**e`` for any integer ``e``."""
        coeff = _norm_coeff(Fraction(coeff))
        if coeff == 0:
            return ZERO
        if e >= 0:
            return cls(((e, coeff),), _ONE, _canonical=True)
        return cls(((0, coeff),), ((-e, 1),), _canonical=True)

    @classmethod
    def qpow(cls, e: int, coeff=1) -> "Scalar":
        """``coeff * q**e``."""
        return cls.upow(2 * e, coeff)

    @classmethod
    def laurent(cls, terms: Iterable[Tuple[int, object]]) -> "Scalar":
        """Sum of ``c * u**e`` over ``(e, c)`` pairs (negative ``e`` allowed)."""
        d: Dict[int, object] = {}
        for e, c in terms:
            d[e] = d.get(e, 0) + Fraction(c)
        p = _from_dict(d)
        if not p:
            return ZERO
        low = p[0][0]
        if low >= 0:
            return cls(p, _ONE, _canonical=True)
        return cls(_p_shift(p, -low), ((-low, 1),), _canonical=True)

    # ------------------------------------------------------------ predicates
    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return len(self.den) == 1

    def is_rational(self) -> bool:
        return self.den == _ONE and (not self.num or (len(self.num) == 1 and self.num[0][0] == 0))

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not a constant")
        return Fraction(self.num[0][1]) if self.num else Fraction(0)

    def laurent_terms(self) -> Tuple[Tuple[int, object], ...]:
        """The ``(u-exponent, coeff)`` pairs of a Laurent scalar."""
        if not self.is_laurent():
            raise ScalarError(f"{self} is not a Laurent polynomial in u")
        s = self.den[0][0]
        return tuple((e - s, c) for e, c in self.num)

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        a, b = self.den, other.den
        if len(a) == 1 and len(b) == 1:
            sa, sb = a[0][0], b[0][0]
            s = max(sa, sb)
            num = _p_add(_p_shift(self.num, s - sa), _p_shift(other.num, s - sb))
            return _laurent_canonical(num, s)
        if a == b:
            return Scalar(_p_add(self.num, other.num), a)
        return Scalar(_p_add(_p_mul(self.num, b), _p_mul(other.num, a)), _p_mul(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_p_scale(self.num, -1), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        a, b = self.den, other.den
        if len(a) == 1 and len(b) == 1:
            return _laurent_canonical(_p_mul(self.num, other.num), a[0][0] + b[0][0])
        return Scalar(_p_mul(self.num, other.num), _p_mul(a, b))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ScalarError("division by zero scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # --------------------------------------------------------------- equality
    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    # ------------------------------------------------------------ evaluation
    def eval(self, q0) -> Fraction:
        """Exact value at ``q = q0``; needs a rational square root of ``q0`` for odd u-powers."""
        return scalar_eval(self, q0)

    def __repr__(self):
        return f"Scalar({render_scalar(self)!r})"

    def __str__(self):
        return render_scalar(self)


def _laurent_canonical(num: Poly, s: int) -> Scalar:
    """Canonical form of ``num / u**s``."""
    if not num:
        return ZERO
    low = num[0][0]
    t = min(low, s)
    if t:
        num = _p_shift(num, -t)
        s -= t
    return Scalar(num, ((s, 1),) if s else _ONE, _canonical=True)


def _canonicalize(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if not den:
        raise ScalarError("zero denominator")
    if not num:
        return (), _ONE
    if len(den) == 1:
        e, c = den[0]
        num = _p_scale(num, Fraction(1) / Fraction(c)) if c != 1 else num
        r = _laurent_canonical(num, e)
        return r.num, r.den
    g = _p_gcd(num, den)
    if g != _ONE:
        num, _ = _p_divmod(num, g)
        den, _ = _p_divmod(den, g)
    lead = den[-1][1]
    if lead != 1:
        inv = Fraction(1) / Fraction(lead)
        num = _p_scale(num, inv)
        den = _p_scale(den, inv)
    return num, den


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar.from_rational(x)
    return NotImplemented


ZERO = Scalar((), _ONE, _canonical=True)
ONE = Scalar(_ONE, _ONE, _canonical=True)
Q = Scalar.qpow(1)
U = Scalar.upow(1)


def as_scalar(x) -> Scalar:
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return s


def qpow(e: int, coeff=1) -> Scalar:
    return Scalar.qpow(e, coeff)


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown scalar op {op!r}")


def _rational_sqrt(x: Fraction):
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _has_odd(p: Poly) -> bool:
    return any(e % 2 for e, _ in p)


def scalar_eval(x: Scalar, q0) -> Fraction:
    """Substitute ``u**2 = q0`` exactly."""
    q0 = Fraction(q0)
    if _has_odd(x.num) or _has_odd(x.den):
        u0 = _rational_sqrt(q0)
        if u0 is None:
            raise ScalarError(f"odd u-power cannot be evaluated at non-square q0={q0}")

        def ev(p):
            return _p_eval(p, u0)
    else:

        def ev(p):
            return sum((Fraction(c) * q0 ** (e // 2) for e, c in p), Fraction(0))

    d = ev(x.den)
    if d == 0:
        raise ScalarError(f"denominator of {x} vanishes at q0={q0}")
    return ev(x.num) / d


def scalar_to_float(x: Scalar, q0: float) -> float:
    u0 = float(q0) ** 0.5
    num = sum(float(c) * u0**e for e, c in x.num)
    den = sum(float(c) * u0**e for e, c in x.den)
    return num / den


# ---------------------------------------------------------------- rendering
def _render_qexp(e: int) -> str:
    """Render ``u**e`` as a power of q."""
    if e % 2:
        return f"q^({e}/2)"
    k = e // 2
    return "q" if k == 1 else f"q^{k}"


def _render_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_poly(terms) -> str:
    """Render ``sum c * u**e`` with q-monomials, highest power first."""
    if not terms:
        return "0"
    out = []
    for e, c in sorted(terms, key=lambda t: -t[0]):
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = _render_coeff(a)
        elif a == 1:
            body = _render_qexp(e)
        else:
            body = f"{_render_coeff(a)}*{_render_qexp(e)}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def render_scalar(x: Scalar) -> str:
    """Text form: Laurent scalars as a sum of ``c*q^k`` terms, others as ``(p)/(r)``."""
    if x.is_laurent():
        return _render_poly(x.laurent_terms())
    return f"({_render_poly(x.num)})/({_render_poly(x.den)})"
