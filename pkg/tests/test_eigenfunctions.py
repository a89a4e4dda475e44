import numpy as np
import pytest

from core.eigenfunctions import (
    HomogPoly,
    classify_symmetry,
    coefficient_vector,
    fischer_inner,
    from_coefficients,
    heun_roots,
    homogenize,
    laplacian,
    monomial_basis,
    phase_part,
    reconstruct,
    sphere_gram,
    sphere_inner,
    sphere_moment,
    to_text,
    verification_report,
)
from core.spectra import create_spectrum_solver
from core.utils.exceptions import InvalidProblem, MissingRoots, MixedParity

SYSTEMS = [
    {"kind": "Ellipsoidal", "params": [1.0, 2.0, 5.0, 8.0]},
    {"kind": "Prolate", "params": [2.4]},
    {"kind": "Oblate", "params": [2.4]},
    {"kind": "Lame", "params": [0.0, 1.0, 2.4]},
    {"kind": "Spherical23", "params": []},
    {"kind": "Cylindrical", "params": []},
    {"kind": "S2Ellipsoidal", "params": [0.0, 1.0, 2.4]},
    {"kind": "S2Spherical", "params": []},
]


def x(i, nvars=4):
    return HomogPoly.variable(nvars, i)


def test_arithmetic():
    p = x(0) * x(0) - x(1) * x(1)
    assert p.terms == {(2, 0, 0, 0): 1.0, (0, 2, 0, 0): -1.0}
    assert (p - p).is_zero()
    assert ((x(0) + x(1)) ** 2).terms[(1, 1, 0, 0)] == 2.0
    assert (3 * x(2)).terms == {(0, 0, 1, 0): 3.0}
    assert p.evaluate([2.0, 1.0, 0.0, 0.0]) == 3.0


def test_mismatched_polynomials():
    with pytest.raises(ValueError):
        x(0) + x(0) * x(1)
    with pytest.raises(ValueError):
        x(0) + x(0, nvars=3)
    with pytest.raises(ValueError):
        HomogPoly(4, 2, {(1, 0, 0, 0): 1.0})


def test_laplacian():
    assert laplacian(x(0) * x(0) - x(1) * x(1)).is_zero()
    assert laplacian(HomogPoly.radius_squared(4)).terms == {(0, 0, 0, 0): 8.0}
    assert laplacian(HomogPoly.radius_squared(3)).terms == {(0, 0, 0): 6.0}
    assert laplacian(x(0)).is_zero()


def test_classify_symmetry():
    assert classify_symmetry(x(0) * x(1) * x(2) * x(2)) == (1, 1, 0, 0)
    with pytest.raises(MixedParity):
        classify_symmetry(x(0) * x(0) + x(0) * x(1))
    with pytest.raises(InvalidProblem):
        classify_symmetry(HomogPoly(4, 2))


def test_phase_part():
    assert phase_part(4, 0, 1, 2).terms == {(2, 0, 0, 0): 1.0, (0, 2, 0, 0): -1.0}
    assert phase_part(4, 0, 1, -2).terms == {(1, 1, 0, 0): 2.0}
    assert phase_part(3, 1, 2, 0).terms == {(0, 0, 0): 1.0}
    for m in range(-5, 6):
        assert laplacian(phase_part(4, 2, 3, m)).is_zero()


def test_homogenize_gegenbauer():
    # R^2 C_2^1(x1/R) = 4 x1^2 - R^2
    poly = homogenize([-1.0, 0.0, 4.0], 4, 0, HomogPoly.radius_squared(4))
    assert poly.terms == {(2, 0, 0, 0): 3.0, (0, 2, 0, 0): -1.0, (0, 0, 2, 0): -1.0, (0, 0, 0, 2): -1.0}
    assert laplacian(poly).is_zero()


def test_sphere_moments():
    assert sphere_moment((0, 0, 0, 0)) == pytest.approx(2 * np.pi**2)
    assert sphere_moment((0, 0, 0)) == pytest.approx(4 * np.pi)
    assert sphere_moment((2, 0, 0)) == pytest.approx(4 * np.pi / 3)
    assert sphere_moment((1, 1, 0, 0)) == 0.0


def test_inner_products():
    p = x(0) * x(1)
    assert fischer_inner(p, p) == 1.0
    assert fischer_inner(x(0) * x(0), x(0) * x(0)) == 2.0
    assert sphere_inner(x(0, 3), x(1, 3)) == 0.0
    assert sphere_inner(x(0, 3), x(0, 3)) == pytest.approx(4 * np.pi / 3)


def test_monomial_basis_size():
    assert len(monomial_basis(4, 5)) == 56
    assert len(monomial_basis(3, 4)) == 15
    assert monomial_basis(3, 1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_to_text():
    text = to_text(x(0) * x(0) - x(1) * x(1))
    assert text.splitlines() == ["-1  0 2 0 0", "1  2 0 0 0"]


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s["kind"])
@pytest.mark.parametrize("degree", [3, 4])
def test_reconstruction_is_harmonic_with_class_parity(system, degree):
    for state in create_spectrum_solver(system).full_spectrum(degree).states:
        poly = reconstruct(state)
        report = verification_report(state, poly)
        assert report["degree"] == degree
        assert report["harmonic_residual"] < 1e-9
        assert report["parity"] == report["expected_parity"]


def test_reconstruction_is_normalised():
    state = create_spectrum_solver({"kind": "Prolate", "params": [2.4]}).full_spectrum(4).states[0]
    _, coeff = reconstruct(state).leading()
    assert coeff == pytest.approx(1.0)


def test_heun_roots_need_coefficients():
    state = create_spectrum_solver({"kind": "Cylindrical"}).full_spectrum(2).states[0]
    with pytest.raises(MissingRoots):
        heun_roots(state)


def test_prolate_heun_roots_lie_in_the_gaps():
    spectrum = create_spectrum_solver({"kind": "Prolate", "params": [2.4]}).full_spectrum(8)
    for state in spectrum.states:
        roots = heun_roots(state)
        assert len(roots) == state.numbers["d"]
        assert np.all((roots > 0.0) & (roots < 2.4))


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s["kind"])
def test_reconstructed_states_are_orthogonal_on_the_sphere(system):
    degree = 4
    states = create_spectrum_solver(system).full_spectrum(degree).states
    polys = [reconstruct(s) for s in states]
    basis = monomial_basis(polys[0].nvars, degree)
    vectors = np.array([coefficient_vector(p, basis) for p in polys])
    gram = vectors @ sphere_gram(basis) @ vectors.T
    norms = np.sqrt(np.diag(gram))
    overlap = gram / np.outer(norms, norms)
    assert np.abs(overlap - np.eye(len(states))).max() < 1e-8
    rebuilt = from_coefficients(polys[0].nvars, degree, basis, vectors[0])
    assert sphere_inner(rebuilt - polys[0], rebuilt - polys[0]) < 1e-20 * gram[0, 0]
