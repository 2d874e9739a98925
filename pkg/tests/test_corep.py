import random
from fractions import Fraction

import pytest

from suq2.algebra import ALPHA, ALPHA_STAR, GAMMA, GAMMA_STAR, ONE_ELT, AlgMatrix
from suq2.corep import (
    Corep,
    CorepError,
    amatrices,
    amatrix_relations,
    check_amatrix_closed_forms,
    corep_build,
    corep_check,
    corep_dsum,
    corep_from_matrix,
    corep_tensor,
    corep_weights,
    decompose_greedy,
    decompose_sin,
    fundamental_corep,
    intertwiners,
    irreducible,
    irreducible_weights,
    u1_unitarization,
    weight_decompose,
    weight_ops,
)
from suq2.scalars import ONE, ZERO, qpow

U = [corep_build(n) for n in range(6)]
HALF = Fraction(1, 2)


def test_build_small_cases():
    assert U[0].entries == AlgMatrix([[ONE_ELT]])
    q = qpow(1)
    assert U[1].entries == AlgMatrix([[ALPHA_STAR, GAMMA.scale(-q)], [GAMMA_STAR, ALPHA]])
    assert U[1].basis_labels == ((0, 1, 0), (1, 0, 0))
    assert U[2][0, 0] == ALPHA_STAR * ALPHA_STAR


@pytest.mark.parametrize("n", range(6))
def test_built_coreps_pass_check(n):
    assert all(corep_check(U[n]).values())


def test_fundamental_matrix_is_a_corep():
    assert all(corep_check(fundamental_corep()).values())


def test_zeroed_entry_breaks_corep_equation():
    rows = [list(r) for r in U[2].entries.entries]
    rows[1][1] = ONE_ELT - ONE_ELT
    bad = corep_from_matrix(AlgMatrix(rows), U[2].basis_labels)
    assert not corep_check(bad)["corep_eq"]


def test_sums_and_tensors_are_coreps():
    assert corep_dsum(U[0], U[0]).entries == AlgMatrix.identity(2)
    assert all(corep_check(corep_dsum(U[1], U[2])).values())
    assert all(corep_check(corep_tensor(U[1], U[2])).values())


def test_dimension_mismatch_rejected():
    with pytest.raises(CorepError):
        Corep(3, AlgMatrix.identity(2), ())


def test_amatrices_of_u1():
    A0, A1, A2 = amatrices(U[1])
    assert A1 == [[-qpow(2), ZERO], [ZERO, ONE]]
    assert A0 == [[ZERO, ZERO], [-qpow(-1), ZERO]]
    assert A2 == [[ZERO, qpow(2)], [ZERO, ZERO]]
    assert amatrices(U[0]) == ([[ZERO]], [[ZERO]], [[ZERO]])


@pytest.mark.parametrize("n", range(6))
def test_amatrix_relations_and_closed_forms(n):
    rel = amatrix_relations(amatrices(U[n]))
    assert rel["1a"] and rel["1b"] and rel["1c"]
    # U_n is not unitary for n >= 1, and the adjoint relation (2a) fails accordingly
    assert rel["2a"] == (n == 0)
    assert all(check_amatrix_closed_forms(n).values())


@pytest.mark.parametrize("n", range(6))
def test_weights_of_un(n):
    assert corep_weights(U[n]) == irreducible_weights(n)


def test_weight_examples():
    assert corep_weights(U[0]) == {0: 1}
    assert corep_weights(corep_tensor(U[1], U[1])) == {-2: 1, 0: 2, 2: 1}
    assert weight_ops(irreducible_weights(1), irreducible_weights(1), "tensor") == {-2: 1, 0: 2, 2: 1}
    assert weight_ops(irreducible_weights(2), irreducible_weights(1), "tensor") == {-3: 1, -1: 2, 1: 2, 3: 1}
    assert weight_ops({1: 2}, {}, "dsum") == {1: 2}
    with pytest.raises(ValueError):
        weight_ops({}, {}, "meet")


def test_non_idempotent_family_rejected():
    M = AlgMatrix([[ALPHA.scale(2) - ONE_ELT]])
    with pytest.raises(CorepError):
        corep_weights(corep_from_matrix(M))


def test_weight_naturality():
    for i in range(4):
        for j in range(4):
            Mi, Mj = corep_weights(U[i]), corep_weights(U[j])
            assert corep_weights(corep_dsum(U[i], U[j])) == weight_ops(Mi, Mj, "dsum")
            assert corep_weights(corep_tensor(U[i], U[j])) == weight_ops(Mi, Mj, "tensor")


def test_clebsch_gordan():
    for m in range(5):
        for n in range(5):
            W = corep_weights(corep_tensor(U[m], U[n]))
            assert weight_decompose(W) == {j: 1 for j in range(abs(m - n), m + n + 1, 2)}


def test_decompose_examples():
    assert weight_decompose({-2: 1, 0: 2, 2: 1}) == {2: 1, 0: 1}
    for n in range(7):
        assert weight_decompose(irreducible_weights(n)) == {n: 1}
    assert weight_decompose(weight_ops(irreducible_weights(0), irreducible_weights(1), "dsum")) == {1: 1, 0: 1}


@pytest.mark.parametrize("bad", [{0: 1, 1: 1}, {1: 1}, {-1: 1}, {2: 1}, {0: -1}])
def test_non_weight_functions_rejected(bad):
    with pytest.raises(CorepError):
        decompose_greedy(bad)
    with pytest.raises(CorepError):
        decompose_sin(bad)


def _random_weight_function(rng, depth=3):
    if depth == 0 or rng.random() < 0.3:
        return irreducible_weights(rng.randint(0, 6))
    a, b = _random_weight_function(rng, depth - 1), _random_weight_function(rng, depth - 1)
    return weight_ops(a, b, rng.choice(["dsum", "tensor"]))


def test_greedy_and_sin_methods_agree():
    rng = random.Random(21)
    for _ in range(100):
        M = _random_weight_function(rng)
        assert decompose_greedy(M) == decompose_sin(M)


def _multiset_combination(rng):
    """Random sums/tensors of U_n together with the expected decomposition."""
    n = rng.randint(0, 4)
    C, D = U[n], {n: 1}
    for _ in range(rng.randint(0, 2)):
        m = rng.randint(0, 2)
        if rng.random() < 0.5:
            C = corep_dsum(C, U[m])
            D = dict(D)
            D[m] = D.get(m, 0) + 1
        else:
            C = corep_tensor(C, U[m])
            nd = {}
            for a, mult in D.items():
                for j in range(abs(a - m), a + m + 1, 2):
                    nd[j] = nd.get(j, 0) + mult
            D = nd
    return C, D


def test_weights_determine_the_construction():
    rng = random.Random(8)
    for _ in range(15):
        C, D = _multiset_combination(rng)
        assert weight_decompose(corep_weights(C)) == dict(sorted(D.items(), reverse=True))


def test_intertwiner_examples():
    I = intertwiners(U[1], U[1], HALF)
    assert len(I) == 1 and I[0][0][1] == 0 and I[0][1][0] == 0 and I[0][0][0] == I[0][1][1]
    assert intertwiners(U[1], U[2], HALF) == []
    assert len(intertwiners(corep_dsum(U[1], U[1]), corep_dsum(U[1], U[1]), HALF)) == 4


@pytest.mark.parametrize("q0", [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)])
def test_schur(q0):
    for m in range(5):
        for n in range(5):
            assert len(intertwiners(U[m], U[n], q0)) == int(m == n)


def test_irreducibility():
    assert all(irreducible(U[n]) for n in range(6))
    assert not irreducible(corep_dsum(U[1], U[0]))
    assert not irreducible(corep_tensor(U[1], U[1]))


def test_a1_diagonal_separates():
    for n in range(6):
        diag = [amatrices(U[n])[1][k][k] for k in range(n + 1)]
        assert len(set(diag)) == n + 1


def test_u1_unitarization():
    assert all(u1_unitarization().values())


def test_intertwiner_rejects_bad_q():
    with pytest.raises(ValueError):
        intertwiners(U[1], U[1], Fraction(3, 2))


def test_json_schema():
    d = U[1].to_json()
    assert d["dim"] == 2 and d["basis"] == [[0, 1, 0], [1, 0, 0]]
    assert len(d["entries"]) == 2 and len(d["entries"][0]) == 2
