import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.eigenfunctions import HomogPoly
from core.models import SystemSpec
from core.oracle import joint
from core.oracle import (
    apply_operator,
    build_operator,
    calibrate,
    check_transport,
    harmonic_subspace,
    joint_spectrum_oracle,
    match_pairs,
    operator_pair_values,
    rayleigh_pair,
    sort_pairs,
)
from core.spectra import create_spectrum_solver
from core.utils.exceptions import DimensionGuard

CYLINDRICAL = SystemSpec(kind="Cylindrical")
SPHERICAL = SystemSpec(kind="Spherical23")
ALL_PAIRS = {(i, j): 1.0 for i in range(4) for j in range(i + 1, 4)}


def separated_pairs(spec, degree):
    states = create_spectrum_solver(spec).full_spectrum(degree).states
    pairs = np.array([operator_pair_values(s) for s in states])
    return sort_pairs(pairs)


@pytest.mark.parametrize("degree", [0, 1, 2, 5])
def test_harmonic_dimension(degree):
    assert harmonic_subspace(degree).shape[1] == (degree + 1) ** 2
    assert harmonic_subspace(degree, nvars=3).shape[1] == 2 * degree + 1


def test_casimir_on_harmonic_polynomial():
    x1, x2, x3 = (HomogPoly.variable(4, i) for i in range(3))
    p = x1 * x2 * x3
    image = apply_operator(ALL_PAIRS, p)
    # D(D+2) at D=3
    assert image.terms == pytest.approx(p.scale(15.0).terms)


def test_dimension_guard():
    with pytest.raises(DimensionGuard):
        build_operator(CYLINDRICAL, "first", 13)


def test_operator_matrix_shape():
    op = build_operator(SPHERICAL, "second", 3)
    assert op.dim == 20
    assert op.entries.shape == (20, 20)


@pytest.mark.parametrize("spec", [CYLINDRICAL, SPHERICAL], ids=lambda s: s.kind)
@pytest.mark.parametrize("degree", [2, 4])
def test_closed_form_systems_match_oracle_exactly(spec, degree):
    assert_allclose(joint_spectrum_oracle(spec, degree), separated_pairs(spec, degree), atol=1e-8)


def test_s2_spherical_matches_oracle():
    spec = SystemSpec(kind="S2Spherical")
    assert_allclose(joint_spectrum_oracle(spec, 4), separated_pairs(spec, 4), atol=1e-8)


def test_calibration_of_closed_form_system_is_identity():
    affine = calibrate(CYLINDRICAL, 2)
    assert affine.is_identity(tol=1e-8)


@pytest.mark.parametrize(
    "spec",
    [
        CYLINDRICAL,
        SPHERICAL,
        SystemSpec(kind="Prolate", params=(2.4,)),
        SystemSpec(kind="Oblate", params=(2.4,)),
        SystemSpec(kind="Lame", params=(0.0, 1.0, 2.4)),
        SystemSpec(kind="Ellipsoidal", params=(1.0, 2.0, 5.0, 8.0)),
        SystemSpec(kind="S2Ellipsoidal", params=(0.0, 1.0, 2.4)),
    ],
    ids=lambda s: s.kind,
)
def test_transport_check_passes(spec):
    report = check_transport(spec, degrees=(3, 4))
    assert report["passed"], report["deviations"]
    assert set(report["deviations"]) == {"3", "4"}


@pytest.mark.parametrize(
    "system",
    [
        {"kind": "Prolate", "params": [2.4]},
        {"kind": "Oblate", "params": [2.4]},
        {"kind": "Lame", "params": [0.0, 1.0, 2.4]},
        {"kind": "Ellipsoidal", "params": [1.0, 2.0, 5.0, 8.0]},
        {"kind": "Cylindrical", "params": []},
    ],
    ids=lambda s: s["kind"],
)
def test_reconstructed_states_are_joint_eigenvectors(system):
    solver = create_spectrum_solver(system)
    for state in solver.full_spectrum(4).states:
        _, residual = rayleigh_pair(solver.spec, state)
        assert residual < 1e-7


def test_rayleigh_values_of_cylindrical_state():
    state = next(
        s for s in create_spectrum_solver(CYLINDRICAL).full_spectrum(4).states if s.values == (2.0, 0.0)
    )
    (a, b), residual = rayleigh_pair(CYLINDRICAL, state)
    assert (a, b) == pytest.approx((4.0, 0.0), abs=1e-10)
    assert residual < 1e-10


def test_sort_pairs_orders_noisy_ties_by_second_component():
    pairs = np.array([[3.0, 5.0], [3.0 + 1e-12, 1.0], [3.0 - 1e-12, 4.0], [1.0, 9.0]])
    assert_allclose(sort_pairs(pairs)[:, 1], [9.0, 1.0, 4.0, 5.0])


def test_sort_pairs_keeps_distinct_first_components_apart():
    pairs = np.array([[2.0, 0.0], [1.0, 7.0], [1.5, -3.0]])
    assert_allclose(sort_pairs(pairs)[:, 0], [1.0, 1.5, 2.0])


def test_match_pairs_recovers_permutation():
    source = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    target = source[[2, 0, 1]] + 1e-3
    assert_allclose(target[match_pairs(source, target)], source + 1e-3)


def test_ellipsoidal_calibration_is_a_rescaling():
    # the integrals act with eigenvalues -lambda1/4 and lambda2/6
    affine = calibrate(SystemSpec(kind="Ellipsoidal", params=(1.0, 2.0, 5.0, 8.0)), 2)
    assert_allclose(affine.matrix, [[-0.25, 0.0], [0.0, 1.0 / 6.0]], atol=1e-6)
    assert_allclose(affine.offset, [0.0, 0.0], atol=1e-5)
    assert affine.residual <= 1e-8


def test_sign_flipped_convention_is_calibrated(monkeypatch):
    separated = joint.separation_pairs
    monkeypatch.setattr(joint, "separation_pairs", lambda spec, d, seed=42: -separated(spec, d, seed))
    affine = calibrate(SPHERICAL, 2)
    assert_allclose(affine.matrix, -np.eye(2), atol=1e-8)
    assert_allclose(affine.offset, [0.0, 0.0], atol=1e-8)
    assert affine.points == 1 + 4 + 9


@pytest.mark.parametrize(
    "spec",
    [
        SystemSpec(kind="Ellipsoidal", params=(1.0, 2.0, 5.0, 8.0)),
        SystemSpec(kind="Prolate", params=(2.4,)),
        SystemSpec(kind="Oblate", params=(2.4,)),
        SystemSpec(kind="Lame", params=(0.0, 1.0, 2.4)),
        SystemSpec(kind="S2Ellipsoidal", params=(0.0, 1.0, 2.4)),
    ],
    ids=lambda s: s.kind,
)
def test_integrals_commute_and_keep_harmonics(spec):
    degree = 4
    a_mat = build_operator(spec, "first", degree).entries
    b_mat = build_operator(spec, "second", degree).entries
    norm = np.linalg.norm(a_mat) * np.linalg.norm(b_mat)
    assert np.linalg.norm(a_mat @ b_mat - b_mat @ a_mat) <= 1e-10 * norm
    harmonics = harmonic_subspace(degree, nvars=spec.nvars)
    outside = np.eye(len(harmonics)) - harmonics @ harmonics.T
    for mat in (a_mat, b_mat):
        assert np.linalg.norm(outside @ mat @ harmonics) <= 1e-10 * np.linalg.norm(mat)
