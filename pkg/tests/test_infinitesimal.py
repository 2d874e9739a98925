import numpy as np
import pytest

from suq2.infinitesimal import (
    RELATIONS,
    _intertwiner_equations,
    c_coeff,
    commutant_dim,
    corep_system,
    d_coeff,
    from_matrices,
    inf_build,
    inf_equivalent,
    inf_verify,
    intertwiner_residual,
    perturbed,
    relative_residuals,
    residual_csv,
)

QS = [0.3, 0.5, 0.9]


@pytest.mark.parametrize("q0", QS)
@pytest.mark.parametrize("n", range(9))
def test_canonical_system_satisfies_relations(n, q0):
    rep = inf_verify(inf_build(n, q0), 1e-9)
    assert rep["pass"], rep["residuals"]


@pytest.mark.parametrize("q0", QS)
@pytest.mark.parametrize("n", range(9))
def test_relative_residuals_are_at_rounding_level(n, q0):
    assert max(relative_residuals(inf_build(n, q0)).values()) < 1e-13


def test_trivial_system():
    S = inf_build(0, 0.5)
    assert S.dim == 1 and not S.A0.any() and not S.A1.any() and not S.A2.any()


def test_coefficients():
    for q in QS:
        assert d_coeff(1, q) == pytest.approx(1.0)
        assert d_coeff(0, q) == 0.0
        for n in range(6):
            assert c_coeff(-n, n, q) == pytest.approx(0.0, abs=1e-12)
            assert c_coeff(n + 2, n, q) == pytest.approx(0.0, abs=1e-12)


def test_half_index_convention_recorded():
    S = inf_build(3, 0.5)
    assert S.convention == "half-index"
    assert S.report["within_tol"] == 1.0
    assert S.report["max_residual[literal]"] > 1e-3


def test_report_fields():
    rep = inf_verify(inf_build(2, 0.5))
    assert set(rep["residuals"]) == set(RELATIONS)
    assert rep["tol"] == 1e-9


def test_invalid_arguments():
    with pytest.raises(ValueError):
        inf_build(-1, 0.5)
    with pytest.raises(ValueError):
        inf_build(2, 1.0)


def test_perturbation_is_detected():
    S = inf_build(3, 0.5)
    bad = perturbed(S, 0, 2, 0, 1e-3)
    assert inf_verify(bad)["residuals"]["1b"] >= 1e-4
    assert not inf_verify(bad)["pass"]


@pytest.mark.parametrize("n", range(7))
def test_canonical_system_is_irreducible(n):
    S = inf_build(n, 0.5)
    assert commutant_dim(S) == 1
    # the null/non-null split in the singular values is well separated
    s = np.linalg.svd(_intertwiner_equations(S.mats, S.mats), compute_uv=False)
    nonzero = s[: s.size - 1] if s.size > 1 else s[:0]
    assert s[-1] < 1e-10
    if nonzero.size:
        assert nonzero.min() > 1e-6


@pytest.mark.parametrize("q0", QS)
@pytest.mark.parametrize("n", range(5))
def test_corep_amatrices_are_equivalent_to_canonical(n, q0):
    S, T = corep_system(n, q0), inf_build(n, q0)
    X = inf_equivalent(S, T)
    assert X is not None
    assert intertwiner_residual(S, T, X) <= 1e-7
    assert abs(np.linalg.det(X)) > 1e-12


def test_inequivalent_systems():
    assert inf_equivalent(inf_build(2, 0.5), inf_build(3, 0.5)) is None
    S = inf_build(2, 0.5)
    Z = from_matrices([np.zeros((3, 3))] * 3, 0.5)
    assert inf_equivalent(S, Z) is None


def test_mixed_q_rejected():
    with pytest.raises(ValueError):
        inf_equivalent(inf_build(1, 0.5), inf_build(1, 0.3))


def test_residual_csv():
    lines = residual_csv(range(3), [0.5]).strip().splitlines()
    assert lines[0].split(",")[:3] == ["n", "q0", "convention"]
    assert len(lines) == 4
    assert all(line.endswith("True") for line in lines[1:])
