"""Checks that do not go through the rewriting engine.

Three independent views of the algebra:

* the faithful representation on l^2 with basis e[r, s] (r >= 0, s integer),
  where a lowers r with weight sqrt(1 - q^(2r)) and c multiplies by q^r while
  raising s;
* the circle characters theta_zeta (a -> zeta, c -> 0);
* the morphism pi onto Laurent polynomials in z (a -> z, c -> 0).

Square roots in the l^2 picture are kept symbolic: a coefficient is a
rational times a product of distinct radicals sqrt(1 - q0^(2j)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple, Union

from .algebra import AlgebraElement, BasisIndex
from .scalars import ONE, ZERO, Scalar, scalar_eval

Radical = FrozenSet[int]
Target = Tuple[int, int]


class L2Vector:
    """Finite combination of e[r, s] with coefficients in Q[sqrt(1 - q0^(2j))].

    ``terms[(r, s)]`` maps a frozenset of radical indices j to its rational
    coefficient.  Repeated radicals are squared out on construction, so two
    vectors built from the same operator words compare equal exactly.
    """

    __slots__ = ("q0", "terms")

    def __init__(self, q0: Fraction, terms: Dict[Target, Dict[Radical, Fraction]] | None = None):
        self.q0 = Fraction(q0)
        self.terms = {t: d for t, d in (terms or {}).items() if d}

    @classmethod
    def basis(cls, r: int, s: int, q0) -> "L2Vector":
        return cls(q0, {(r, s): {frozenset(): Fraction(1)}})

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, target: Target, radicals, coeff: Fraction) -> None:
        """Accumulate ``coeff * prod sqrt(1 - q0^(2j)) e[target]`` in place."""
        rad, coeff = _reduce_radicals(radicals, coeff, self.q0)
        if coeff == 0:
            return
        slot = self.terms.setdefault(target, {})
        v = slot.get(rad, 0) + coeff
        if v:
            slot[rad] = v
        else:
            slot.pop(rad)
            if not slot:
                del self.terms[target]

    def __eq__(self, other):
        return isinstance(other, L2Vector) and self.q0 == other.q0 and self.terms == other.terms

    def __repr__(self):
        return f"L2Vector(q0={self.q0}, {self.terms})"


def _reduce_radicals(radicals, coeff: Fraction, q0: Fraction) -> Tuple[Radical, Fraction]:
    counts: Dict[int, int] = {}
    for j in radicals:
        counts[j] = counts.get(j, 0) + 1
    keep = set()
    for j, c in counts.items():
        if j == 0:
            return frozenset(), Fraction(0)
        if c // 2:
            coeff *= (1 - q0 ** (2 * j)) ** (c // 2)
        if c % 2:
            keep.add(j)
    return frozenset(keep), coeff


def _radical_indices(k: int, r: int) -> Tuple[int, ...]:
    """Radical indices picked up by the alpha-power k acting on e[r, .]."""
    if k >= 0:
        return tuple(r - l for l in range(k))
    return tuple(r + 1 + l for l in range(-k))


def _mono_apply(idx: BasisIndex, r: int, s: int):
    """(radicals, q0-exponent of q^(r(n+m)), target) for A[idx] e[r, s]; None if annihilated."""
    k, n, m = idx
    rads = _radical_indices(k, r)
    if 0 in rads or r - k < 0:
        return None
    return rads, r * (n + m), (r - k, s + m - n)


def l2_apply_vector(x: AlgebraElement, v: L2Vector) -> L2Vector:
    q0 = v.q0
    out = L2Vector(q0)
    for idx, c in x.items():
        cval = scalar_eval(c, q0)
        for (r, s), slot in v.terms.items():
            hit = _mono_apply(idx, r, s)
            if hit is None:
                continue
            rads, qexp, target = hit
            for rad, coeff in slot.items():
                out.add_term(target, tuple(rad) + rads, coeff * cval * q0**qexp)
    return out


def l2_apply(x: AlgebraElement, r: int, s: int, q0) -> L2Vector:
    """Image of e[r, s] under the l^2 representation of ``x`` at q = q0."""
    q0 = Fraction(q0)
    if not 0 < q0 < 1:
        raise ValueError("q0 must lie in (0, 1)")
    return l2_apply_vector(x, L2Vector.basis(r, s, q0))


def oracle_depth(x: AlgebraElement) -> int:
    if x.is_zero():
        return 0
    return max(abs(k) for k, _, _ in x.terms) + len(x) + 2


def oracle_equal(x: AlgebraElement, y: AlgebraElement, q0=Fraction(1, 2)) -> bool:
    """Decide x == y by applying x - y to e[r, 0] for r = 0..R.

    For a fixed target offset (k, m - n) the surviving coefficients form
    sum lambda_j q0^(r c_j) times one shared radical, a polynomial in q0^r
    with at most len(x - y) monomials; R leaves more sample points than that.
    """
    diff = x - y
    q0 = Fraction(q0)
    for r in range(oracle_depth(diff) + 1):
        if not l2_apply(diff, r, 0, q0).is_zero():
            return False
    return True


def check_l2_relations(q0=Fraction(1, 2), depth: int = 6) -> bool:
    """The operators a', c' satisfy the defining relations on e[r, s], r < depth."""
    from .algebra import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, ONE_ELT
    from .scalars import qpow

    q2 = qpow(2)

    def op(*word):
        def apply(v):
            for g in reversed(word):
                v = l2_apply_vector(g, v)
            return v

        return apply

    rels = [
        ((op(ALPHA_STAR, ALPHA), ONE), (op(GAMMA_STAR, GAMMA), ONE), (op(ONE_ELT), -ONE)),
        ((op(ALPHA, ALPHA_STAR), ONE), (op(GAMMA_STAR, GAMMA), q2), (op(ONE_ELT), -ONE)),
        ((op(GAMMA_STAR, GAMMA), ONE), (op(GAMMA, GAMMA_STAR), -ONE)),
        ((op(ALPHA, GAMMA), ONE), (op(GAMMA, ALPHA), -qpow(1))),
        ((op(ALPHA, GAMMA_STAR), ONE), (op(GAMMA_STAR, ALPHA), -qpow(1))),
    ]
    for r in range(depth):
        for s in (-1, 0, 2):
            for rel in rels:
                acc = L2Vector(q0)
                for apply, coeff in rel:
                    img = apply(L2Vector.basis(r, s, q0))
                    cval = scalar_eval(coeff, q0)
                    for t, slot in img.terms.items():
                        for rad, c in slot.items():
                            acc.add_term(t, rad, c * cval)
                if not acc.is_zero():
                    return False
    return True


# ------------------------------------------------------------ circle maps
class CirclePoly:
    """Laurent polynomial in z with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[int, Scalar] | None = None):
        self.terms = {p: c for p, c in (terms or {}).items() if c}

    def __add__(self, other: "CirclePoly") -> "CirclePoly":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, ZERO) + c
        return CirclePoly(out)

    def __mul__(self, other: "CirclePoly") -> "CirclePoly":
        out: Dict[int, Scalar] = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in other.terms.items():
                out[p1 + p2] = out.get(p1 + p2, ZERO) + c1 * c2
        return CirclePoly(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, CirclePoly) and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"({c}) z^{p}" for p, c in sorted(self.terms.items()))
        return f"CirclePoly({body or '0'})"


def pi_map(x: AlgebraElement) -> CirclePoly:
    """a -> z, c -> 0; only the pure alpha-powers survive."""
    return CirclePoly({k: c for (k, n, m), c in x.terms.items() if n == 0 and m == 0})


@dataclass(frozen=True)
class GaussRational:
    """Exact complex number with rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, other):
        return GaussRational(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)
        other = Fraction(other)
        return GaussRational(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = GaussRational(Fraction(1))
        base = self
        if e < 0:
            n = base.re**2 + base.im**2
            base = GaussRational(base.re / n, -base.im / n)
            e = -e
        for _ in range(e):
            out = out * base
        return out

    def __complex__(self):
        return complex(float(self.re), float(self.im))


_UNIT_ROOTS = {1: GaussRational(Fraction(1)), 1j: GaussRational(Fraction(0), Fraction(1)),
               -1: GaussRational(Fraction(-1)), -1j: GaussRational(Fraction(0), Fraction(-1))}


def exact_root(zeta) -> GaussRational | None:
    if isinstance(zeta, GaussRational):
        return zeta
    for z, g in _UNIT_ROOTS.items():
        if complex(zeta) == z:
            return g
    return None


def theta_eval(x: AlgebraElement, zeta, q0=Fraction(1, 2)) -> Union[GaussRational, complex]:
    """The character a -> zeta, c -> 0; exact at fourth roots of unity."""
    g = exact_root(zeta)
    if g is not None:
        acc = GaussRational(Fraction(0))
        for (k, n, m), c in x.terms.items():
            if n == 0 and m == 0:
                acc = acc + (g**k) * scalar_eval(c, q0)
        return acc
    zeta = complex(zeta)
    if abs(abs(zeta) - 1) > 1e-12:
        raise ValueError("zeta must lie on the unit circle")
    total = 0j
    for (k, n, m), c in x.terms.items():
        if n == 0 and m == 0:
            total += float(scalar_eval(c, q0)) * zeta**k
    return total


def theta_convolve(x: AlgebraElement, zeta, eta, q0=Fraction(1, 2)):
    """(theta_zeta * theta_eta)(x) = (theta_zeta (x) theta_eta) Delta(x)."""
    from .hopf import delta

    exact = exact_root(zeta) is not None and exact_root(eta) is not None
    total = GaussRational(Fraction(0)) if exact else 0j
    cache = {}

    def th(idx, z):
        key = (idx, z)
        if key not in cache:
            cache[key] = theta_eval(AlgebraElement({idx: ONE}), z, q0)
        return cache[key]

    for (left, right), c in delta(x).terms.items():
        lv, rv = th(left, zeta), th(right, eta)
        cv = scalar_eval(c, q0)
        if exact:
            total = total + lv * rv * cv
        else:
            total += complex(lv) * complex(rv) * float(cv)
    return total
