"""Verification suites shared by the command line and the test-suite.

Each suite yields ``Check(name, ok, detail)`` records in a fixed order, so a
failure report can name the first violated identity.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List

from .algebra import (
    AlgebraElement,
    alg_mul,
    basis_element,
    check_fundamental_unitary,
    index_word,
    normalize_word,
)
from .scalars import Scalar

SUITES = ("relations", "hopf", "conprop", "derivation", "corep", "inf", "sl2")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


# ------------------------------------------------------------- samplers
def random_index(rng: random.Random, bound: int = 3):
    return (rng.randint(-bound, bound), rng.randint(0, bound), rng.randint(0, bound))


def random_scalar(rng: random.Random) -> Scalar:
    e = rng.randint(-3, 3)
    c = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
    s = Scalar.qpow(e, c)
    if rng.random() < 0.3:
        s = s + Scalar.qpow(rng.randint(-2, 2), rng.choice([-1, 1]))
    return s


def random_element(rng: random.Random, bound: int = 2, max_terms: int = 3) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_index(rng, bound)] = random_scalar(rng)
    return AlgebraElement(terms)


def random_word(rng: random.Random, length: int) -> tuple:
    return tuple(rng.choice(("a", "a*", "c", "c*")) for _ in range(length))


# --------------------------------------------------------------- suites
def suite_relations(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .oracle import check_l2_relations, oracle_equal
    from .parser import parse_element

    yield Check("fundamental matrix is unitary", check_fundamental_unitary())
    defining = {
        "a* a + c* c = 1": "a^* a + c^* c - 1",
        "a a* + q^2 c* c = 1": "a a^* + q^2 c^* c - 1",
        "c* c = c c*": "c^* c - c c^*",
        "a c = q c a": "a c - q c a",
        "a c* = q c* a": "a c^* - q c^* a",
    }
    for name, text in defining.items():
        yield Check(f"relation {name}", parse_element(text).is_zero())
    yield Check("l2 operators satisfy the relations", check_l2_relations(q0))
    rng = random.Random(seed)
    ok = True
    for _ in range(60):
        w = random_word(rng, rng.randint(2, 7))
        left, right = normalize_word(w, order="left"), normalize_word(w, order="right")
        prod = AlgebraElement.scalar(1)
        for g in w:
            prod = alg_mul(prod, basis_element(_gen_idx(g)))
        if not (left == right == prod):
            ok = False
            break
    yield Check("rewriting is confluent and agrees with the closed-form product", ok)
    ok = True
    for _ in range(40):
        x, y, z = (random_element(rng, bound) for _ in range(3))
        if alg_mul(alg_mul(x, y), z) != alg_mul(x, alg_mul(y, z)):
            ok = False
            break
    yield Check("product is associative", ok)
    ok = True
    for _ in range(25):
        x, y = random_element(rng, bound), random_element(rng, bound)
        if not oracle_equal(alg_mul(x, y), _word_product(x, y), q0):
            ok = False
            break
    yield Check("l2 oracle agrees with normal-form products", ok)


def _gen_idx(g: str):
    return {"a": (1, 0, 0), "a*": (-1, 0, 0), "c*": (0, 1, 0), "c": (0, 0, 1)}[g]


def _word_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """x y via the rewriting engine on concatenated words."""
    out = AlgebraElement()
    for i1, c1 in x.terms.items():
        for i2, c2 in y.terms.items():
            out = out + normalize_word(index_word(i1) + index_word(i2), c1 * c2)
    return out


def suite_hopf(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .dual import basis_grid
    from .hopf import cocancel_witness, delta_is_homomorphism, hopf_axiom_check

    failures: Dict[str, object] = {}
    for idx in basis_grid(2, 4):
        for law, ok in hopf_axiom_check(basis_element(idx)).items():
            if not ok and law not in failures:
                failures[law] = idx
    for law in ("coassoc", "counit_left", "counit_right", "antipode_left", "antipode_right", "s_square"):
        yield Check(f"hopf {law} on |k| <= 2, n,m <= 4", law not in failures,
                    f"first failure at {failures[law]}" if law in failures else "")
    for name, ok in cocancel_witness().items():
        yield Check(f"cocancellation {name}", ok)
    rng = random.Random(seed)
    ok = all(delta_is_homomorphism(random_element(rng, 2), random_element(rng, 2)) for _ in range(20))
    yield Check("Delta is multiplicative", ok)


def suite_conprop(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .dual import POINT, regenerate_tables, verify_conprop

    yield Check("4x4 point satisfies the relations", POINT.relations_hold())
    for name, ok in verify_conprop(bound).items():
        yield Check(f"convolution identity {name} (B={bound})", ok)
    report = regenerate_tables()
    n = sum(len(v) for v in report.values())
    yield Check("printed tables regenerated", True, f"{n} printed entries disagree with the computed values")


def suite_derivation(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .dual import basis_grid, dmap, leibniz_holds

    rng = random.Random(seed)
    ok = all(leibniz_holds(random_element(rng, 2), random_element(rng, 2)) for _ in range(40))
    yield Check("d is a derivation (Leibniz)", ok)
    kb = bound + 1
    bad = [idx for idx in basis_grid(kb) if idx != (0, 0, 0) and dmap(basis_element(idx)).is_zero()]
    yield Check(f"d kills no nonidentity monomial (|k|,n,m <= {kb})", not bad, f"zero at {bad[:3]}" if bad else "")
    yield Check("d(1) = 0", dmap(AlgebraElement.scalar(1)).is_zero())


def suite_corep(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .corep import (
        amatrices,
        amatrix_relations,
        check_amatrix_closed_forms,
        corep_build,
        corep_check,
        corep_tensor,
        corep_weights,
        intertwiners,
        irreducible_weights,
        u1_unitarization,
        weight_decompose,
    )

    for n in range(6):
        U = corep_build(n)
        for name, ok in corep_check(U).items():
            yield Check(f"U_{n} {name}", ok)
        yield Check(f"U_{n} weights = M_({n})", corep_weights(U) == irreducible_weights(n))
        rel = amatrix_relations(amatrices(U))
        for r in ("1a", "1b", "1c"):
            yield Check(f"U_{n} A-matrix relation {r}", rel[r])
        for name, ok in check_amatrix_closed_forms(n).items():
            yield Check(f"U_{n} {name}", ok)
    for name, ok in u1_unitarization().items():
        yield Check(f"U_1 unitarization: {name}", ok)
    ok = all(
        len(intertwiners(corep_build(m), corep_build(n), q0)) == int(m == n) for m in range(5) for n in range(5)
    )
    yield Check(f"Schur: dim Hom(U_m, U_n) = delta_mn at q0={q0}", ok)
    ok = True
    for m in range(4):
        for n in range(4):
            want = {j: 1 for j in range(abs(m - n), m + n + 1, 2)}
            if weight_decompose(corep_weights(corep_tensor(corep_build(m), corep_build(n)))) != want:
                ok = False
    yield Check("Clebsch-Gordan for m, n <= 3", ok)


def suite_inf(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .infinitesimal import commutant_dim, corep_system, inf_build, inf_equivalent, inf_verify

    q = float(q0)
    for n in range(9):
        S = inf_build(n, q)
        rep = inf_verify(S, 1e-9)
        worst = max(rep["residuals"], key=rep["residuals"].get)
        yield Check(f"canonical system n={n} at q0={q} ({S.convention})", rep["pass"],
                    f"max residual {rep['residuals'][worst]:.2e} in {worst}")
    yield Check("canonical commutants are scalar (n <= 6)", all(commutant_dim(inf_build(n, q)) == 1 for n in range(7)))
    ok = all(inf_equivalent(inf_build(n, q), corep_system(n, q)) is not None for n in range(5))
    yield Check("A-matrices of U_n are equivalent to the canonical system (n <= 4)", ok)


def suite_sl2(q0: Fraction, bound: int, seed: int = 0) -> Iterator[Check]:
    from .su2 import sl2_verify

    for n in range(11):
        rep = sl2_verify(n)
        bad = [k for k, v in rep.items() if not v]
        yield Check(f"sl2 representation n={n}", not bad, ", ".join(bad))


SUITE_FUNCS: Dict[str, Callable[..., Iterator[Check]]] = {
    "relations": suite_relations,
    "hopf": suite_hopf,
    "conprop": suite_conprop,
    "derivation": suite_derivation,
    "corep": suite_corep,
    "inf": suite_inf,
    "sl2": suite_sl2,
}


def run_suite(name: str, q0=Fraction(1, 2), bound: int = 3, seed: int = 0) -> List[Check]:
    names = SUITES if name == "all" else (name,)
    out: List[Check] = []
    for n in names:
        out.extend(SUITE_FUNCS[n](Fraction(q0), bound, seed))
    return out
