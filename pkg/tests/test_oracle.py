import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import HALF, elements, rational_elements
from suq2.algebra import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, AlgebraElement, alg_mul, basis_element
from suq2.oracle import (
    GaussRational,
    L2Vector,
    _radical_indices,
    check_l2_relations,
    l2_apply,
    l2_apply_vector,
    oracle_equal,
    pi_map,
    theta_convolve,
    theta_eval,
)
from suq2.suites import random_index

ROOTS = [1, 1j, -1, -1j]


def test_l2_relations_hold_for_several_q():
    for q0 in (Fraction(1, 3), HALF, Fraction(2, 3)):
        assert check_l2_relations(q0)


def test_alpha_lowers_with_radical():
    v = l2_apply(ALPHA, 3, 0, HALF)
    assert v.terms == {(2, 0): {frozenset({3}): Fraction(1)}}
    assert l2_apply(ALPHA, 0, 5, HALF).is_zero()
    w = l2_apply(GAMMA, 2, 1, HALF)
    assert w.terms == {(2, 2): {frozenset(): Fraction(1, 4)}}


def test_radical_indices_annihilate_when_k_exceeds_r():
    assert 0 in _radical_indices(3, 2)
    assert 0 not in _radical_indices(2, 2)
    assert _radical_indices(-2, 1) == (2, 3)


def test_q0_out_of_range():
    with pytest.raises(ValueError):
        l2_apply(ALPHA, 0, 0, Fraction(3, 2))


def test_distinct_normal_forms_are_separated():
    rng = random.Random(11)
    seen = 0
    while seen < 200:
        i, j = random_index(rng), random_index(rng)
        if i == j:
            continue
        seen += 1
        assert not oracle_equal(basis_element(i), basis_element(j), HALF)


@settings(max_examples=100)
@given(rational_elements(), rational_elements())
def test_oracle_decides_equality_for_rational_combinations(x, y):
    assert oracle_equal(x, y, HALF) == (x == y)


@settings(max_examples=60)
@given(elements(max_terms=2), elements(max_terms=2), elements(max_terms=2))
def test_two_bracketings_agree_in_l2(x, y, z):
    assert oracle_equal(alg_mul(alg_mul(x, y), z), alg_mul(x, alg_mul(y, z)), HALF)


@settings(max_examples=60)
@given(elements(max_terms=2), elements(max_terms=2))
def test_l2_is_multiplicative(x, y):
    for r in range(4):
        v = L2Vector.basis(r, 1, HALF)
        assert l2_apply_vector(alg_mul(x, y), v) == l2_apply_vector(x, l2_apply_vector(y, v))


@given(elements(), elements())
def test_pi_is_a_homomorphism(x, y):
    assert pi_map(alg_mul(x, y)) == pi_map(x) * pi_map(y)
    assert pi_map(x + y) == pi_map(x) + pi_map(y)


def test_pi_on_generators():
    assert pi_map(ALPHA).terms == {1: AlgebraElement.scalar(1).scalar_part()}
    assert pi_map(GAMMA).is_zero() and pi_map(GAMMA_STAR).is_zero()
    assert set(pi_map(ALPHA_STAR).terms) == {-1}


def test_theta_values():
    i = GaussRational(Fraction(0), Fraction(1))
    assert theta_eval(ALPHA, 1j) == i
    assert theta_eval(ALPHA_STAR, 1j) == GaussRational(Fraction(0), Fraction(-1))
    assert theta_eval(GAMMA, -1) == GaussRational(Fraction(0))
    z = theta_eval(ALPHA, complex(0.6, 0.8))
    assert abs(z - complex(0.6, 0.8)) < 1e-15


def test_character_convolution_on_fourth_roots():
    grid = [(k, n, m) for k in range(-3, 4) for n in range(3) for m in range(3)]
    for zeta in ROOTS:
        for eta in ROOTS:
            ze = complex(zeta) * complex(eta)
            for idx in grid:
                x = basis_element(idx)
                assert theta_convolve(x, zeta, eta) == theta_eval(x, ze)


def test_character_convolution_off_grid_is_numeric():
    z, e = complex(0.6, 0.8), complex(0.8, -0.6)
    x = alg_mul(ALPHA, ALPHA) + GAMMA
    assert abs(theta_convolve(x, z, e) - theta_eval(x, z * e)) < 1e-12
