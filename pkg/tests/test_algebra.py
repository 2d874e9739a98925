import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import elements
from suq2.algebra import (
    ALPHA,
    ALPHA_STAR,
    GAMMA,
    GAMMA_STAR,
    ONE_ELT,
    AlgebraElement,
    AlgMatrix,
    alg_adjoint,
    alg_mul,
    basis_element,
    check_fundamental_unitary,
    element_from_json,
    element_to_json,
    fundamental_matrix,
    index_word,
    mat_ops,
    normalize_word,
)
from suq2.scalars import ONE, qpow
from suq2.suites import random_element, random_word

words = st.lists(st.sampled_from(["a", "a*", "c", "c*"]), min_size=0, max_size=8)


def test_commutation_examples():
    assert alg_mul(GAMMA, ALPHA) == AlgebraElement.basis(1, 0, 1, qpow(-1))
    assert alg_mul(ALPHA_STAR, ALPHA) == ONE_ELT - AlgebraElement.basis(0, 1, 1)
    assert alg_mul(ALPHA, ALPHA_STAR) == ONE_ELT - AlgebraElement.basis(0, 1, 1, qpow(2))
    assert alg_mul(ALPHA, GAMMA_STAR) == AlgebraElement.basis(1, 1, 0)
    assert alg_mul(GAMMA, GAMMA_STAR) == alg_mul(GAMMA_STAR, GAMMA)


def test_basis_is_closed_under_normal_ordered_products():
    # a^k (c*^n c^m) is already normal
    assert alg_mul(basis_element((2, 0, 0)), basis_element((0, 1, 2))) == basis_element((2, 1, 2))
    assert alg_mul(basis_element((-2, 0, 0)), basis_element((0, 3, 0))) == basis_element((-2, 3, 0))


def test_fundamental_unitarity_and_negative_control():
    assert check_fundamental_unitary()
    assert not check_fundamental_unitary(corner=ONE)
    assert not check_fundamental_unitary(corner=qpow(2))


def test_matrix_ops():
    U = fundamental_matrix()
    assert mat_ops(U, U.adjoint_transpose(), "mul") == AlgMatrix.identity(2)
    assert mat_ops(U, None, "adjoint-transpose") == U.adjoint_transpose()
    with pytest.raises(ValueError):
        mat_ops(U, U, "kron")
    with pytest.raises(ValueError):
        AlgMatrix([[ONE_ELT], [ONE_ELT, ONE_ELT]])


@given(words, st.sampled_from(["left", "right"]))
def test_rewriting_matches_closed_form(word, order):
    prod = ONE_ELT
    for g in word:
        prod = alg_mul(prod, {"a": ALPHA, "a*": ALPHA_STAR, "c": GAMMA, "c*": GAMMA_STAR}[g])
    assert normalize_word(word, order=order) == prod


@given(words)
def test_rewriting_is_confluent(word):
    assert normalize_word(word, order="left") == normalize_word(word, order="right")


def test_normal_words_are_fixed_points():
    for idx in [(3, 2, 1), (-2, 0, 3), (0, 0, 0), (1, 1, 0)]:
        assert normalize_word(index_word(idx)) == basis_element(idx)


def test_unknown_generator_rejected():
    with pytest.raises(ValueError):
        normalize_word(["a", "b"])


def test_associativity_on_500_triples():
    rng = random.Random(7)
    for _ in range(500):
        x, y, z = (random_element(rng, 2, 2) for _ in range(3))
        assert alg_mul(alg_mul(x, y), z) == alg_mul(x, alg_mul(y, z))


@given(elements(), elements())
def test_adjoint_is_antimultiplicative_involution(x, y):
    assert alg_adjoint(alg_mul(x, y)) == alg_mul(alg_adjoint(y), alg_adjoint(x))
    assert alg_adjoint(alg_adjoint(x)) == x


@settings(max_examples=50)
@given(elements(), elements(), elements())
def test_distributivity(x, y, z):
    assert alg_mul(x, y + z) == alg_mul(x, y) + alg_mul(x, z)


@given(elements())
def test_json_round_trip(x):
    assert element_from_json(element_to_json(x)) == x


def test_word_product_equals_generator_products():
    rng = random.Random(3)
    for _ in range(50):
        w = random_word(rng, 6)
        direct = ONE_ELT
        for g in w:
            direct = direct * {"a": ALPHA, "a*": ALPHA_STAR, "c": GAMMA, "c*": GAMMA_STAR}[g]
        assert direct == normalize_word(w)


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        ALPHA ** -1
