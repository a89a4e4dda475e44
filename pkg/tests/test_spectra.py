import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.models import SystemSpec
from core.spectra import (
    class_colour,
    create_spectrum_solver,
    create_system_spec,
    cylindrical_spectrum,
    full_spectrum,
    lame_class_counts,
    lame_function_label,
    lame_spectrum,
    oblate_spectrum,
    prolate_class_counts,
    prolate_spectrum,
    s2_ellipsoidal_spectrum,
    s2_spherical_spectrum,
    spherical_spectrum,
)
from core.geometry import degenerate
from core.oracle import match_pairs, operator_pair_values
from core.spectra.ellipsoidal import class_counts as ellipsoidal_class_counts
from core.spectra.ellipsoidal import gen_lame_params, separation_constants, spectral_parameters
from core.utils.exceptions import InvalidProblem, ValidationError

ELLIPSOIDAL = SystemSpec(kind="Ellipsoidal", params=(1.0, 2.0, 5.0, 8.0))

SYSTEMS = [
    {"kind": "Ellipsoidal", "params": [1.0, 2.0, 5.0, 8.0]},
    {"kind": "Prolate", "params": [2.4]},
    {"kind": "Oblate", "params": [2.4]},
    {"kind": "Lame", "params": [0.0, 1.0, 2.4]},
    {"kind": "Spherical23", "params": []},
    {"kind": "Cylindrical", "params": []},
]


def test_ellipsoidal_counting_formula():
    counts = ellipsoidal_class_counts(18)
    assert sum(counts.values()) == 361
    assert len(counts) == 8
    assert counts["0000"] == 55
    assert counts["1111"] == 36
    assert all(counts[k] == 45 for k in counts if k.count("1") == 2)


def test_prolate_counting_formula():
    assert prolate_class_counts(20) == {"00": 121, "01": 110, "10": 110, "11": 100}
    assert sum(prolate_class_counts(7).values()) == 64


@pytest.mark.parametrize("degree", [20, 21])
def test_lame_counting_formula(degree):
    assert sum(lame_class_counts(degree).values()) == (degree + 1) ** 2


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s["kind"])
@pytest.mark.parametrize("degree", [0, 1, 4, 5])
def test_state_count_and_classes(system, degree):
    solver = create_spectrum_solver(system)
    spectrum = solver.full_spectrum(degree)
    assert len(spectrum) == (degree + 1) ** 2
    assert spectrum.class_counts() == solver.class_counts(degree)
    assert spectrum.hbar == pytest.approx(1.0 / (degree + 1))
    assert all(s.energy == degree * (degree + 2) for s in spectrum.states)


@pytest.mark.parametrize("system", SYSTEMS, ids=lambda s: s["kind"])
def test_joint_spectrum_is_simple(system):
    points = create_spectrum_solver(system).full_spectrum(6).points(scaled=False)
    gaps = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
    np.fill_diagonal(gaps, np.inf)
    assert gaps.min() > 1e-8


def test_closed_form_sizes():
    assert len(spherical_spectrum(30)) == 961
    assert len(cylindrical_spectrum(20)) == 441
    states = s2_spherical_spectrum(5)
    assert len(states) == sum(2 * ell + 1 for ell in range(6))
    with pytest.raises(InvalidProblem):
        s2_spherical_spectrum(-1)


@pytest.mark.parametrize(
    "system", [{"kind": "S2Ellipsoidal", "params": [0.0, 1.0, 2.4]}, {"kind": "S2Spherical", "params": []}]
)
@pytest.mark.parametrize("ell", [0, 3, 8])
def test_s2_counts(system, ell):
    solver = create_spectrum_solver(system)
    spectrum = solver.full_spectrum(ell)
    assert len(spectrum) == 2 * ell + 1
    assert spectrum.class_counts() == solver.class_counts(ell)
    assert all(s.energy == ell * (ell + 1) for s in spectrum.states)


def test_prolate_ground_states_of_each_m():
    a, degree = 2.4, 8
    for state in prolate_spectrum(a, degree).states:
        if state.symmetry == (0, 0) and state.numbers["d"] == 0:
            m = state.numbers["m"]
            assert state.values == pytest.approx((m, a * abs(m)))


def test_oblate_ground_states_of_each_m():
    for state in oblate_spectrum(2.4, 8).states:
        if state.symmetry == (0, 0) and state.numbers["d"] == 0:
            m = state.numbers["m"]
            assert state.values == pytest.approx((m, abs(m)))


@pytest.mark.parametrize("degree", [6, 7])
def test_lame_top_state(degree):
    spectrum = lame_spectrum((0.0, 1.0, 2.4), degree)
    top = [s for s in spectrum.states if s.numbers["d"] == 0 and s.symmetry[1:] == (0, 0, 0)]
    assert len(top) == 1
    hbar = spectrum.hbar
    assert_allclose(top[0].scaled, (1.0 - hbar**2, 0.0), atol=1e-12)


def test_lame_shifted_axes_shift_g():
    """g transforms as g = f1 (E - f) + (f2 - f1) g' under an affine change of axes."""
    degree = 5
    base = lame_spectrum((0.0, 1.0, 2.4), degree)
    moved = lame_spectrum((1.0, 3.0, 5.8), degree)
    energy = degree * (degree + 2)
    for s, t in zip(base.states, moved.states):
        assert s.key == t.key
        f, g = s.values
        assert t.values[0] == pytest.approx(f)
        assert t.values[1] == pytest.approx(1.0 * (energy - f) + 2.0 * g, abs=1e-9)


def test_spherical_zero_angular_momentum():
    spectrum = spherical_spectrum(9)
    state = next(s for s in spectrum.states if s.numbers["l"] == 0)
    assert_allclose(state.scaled, (0.0, 1.0 - spectrum.hbar**2), atol=1e-12)


def test_cylindrical_values_are_integers():
    spectrum = cylindrical_spectrum(6)
    raw = spectrum.points(scaled=False)
    assert_allclose(raw, np.round(raw))
    assert np.all(np.abs(raw).sum(axis=1) <= 6)


def test_ellipsoidal_linear_states():
    spectrum = full_spectrum(ELLIPSOIDAL, 1)
    assert sorted(s.class_bits for s in spectrum.states) == ["0001", "0010", "0100", "1000"]
    assert all(s.roots == () for s in spectrum.states)


def test_ellipsoidal_roots_sit_in_gaps():
    e = ELLIPSOIDAL.params
    for state in full_spectrum(ELLIPSOIDAL, 6).states:
        n = (state.numbers["n1"], state.numbers["n2"], state.numbers["n3"])
        roots = np.asarray(state.roots)
        for j, count in enumerate(n):
            assert np.sum((roots > e[j]) & (roots < e[j + 1])) == count


def test_ellipsoidal_rejects_close_axes():
    with pytest.raises(InvalidProblem):
        create_spectrum_solver({"kind": "Ellipsoidal", "params": [1.0, 2.0, 2.0 + 1e-14, 8.0]})


def test_degree_cap():
    solver = create_spectrum_solver({"kind": "Cylindrical"})
    with pytest.raises(InvalidProblem):
        solver.full_spectrum(-1)
    with pytest.raises(InvalidProblem):
        solver.full_spectrum(65)


def test_factory_layouts():
    assert create_system_spec({"Prolate": {"params": [2.4]}}) == SystemSpec(kind="Prolate", params=(2.4,))
    assert create_system_spec({"Oblate": [3.0]}).params == (3.0,)
    assert create_system_spec({"kind": "Spherical23"}).kind == "Spherical23"


def test_factory_errors():
    with pytest.raises(ValidationError):
        create_system_spec({"kind": "Toroidal", "params": []})
    with pytest.raises(ValidationError):
        create_system_spec({"Prolate": [2.4], "Oblate": [2.4]})
    with pytest.raises(InvalidProblem):
        create_system_spec({"kind": "Prolate", "params": [0.5]})


def test_scaled_values_follow_hbar_powers():
    spectrum = prolate_spectrum(2.4, 10)
    h = spectrum.hbar
    for state in spectrum.states[:20]:
        m, lam = state.values
        assert state.scaled == pytest.approx((m * h, lam * h * h))


def test_lame_labels():
    assert lame_function_label(2, 1, (0, 0, 0)) == "Ec_{4}^{2}"
    assert lame_function_label(0, 0, (1, 1, 1)) == "Es_{3}^{2}"
    with pytest.raises(InvalidProblem):
        lame_function_label(1, 2, (0, 0, 0))


def test_class_colours():
    assert class_colour("Prolate", "00") == "blue"
    assert class_colour("Ellipsoidal", "1111") == "orange"
    assert class_colour("Cylindrical", "0000") == "blue"


def separated(values):
    return np.array([separation_constants(v) for v in values])


def by_label(spectrum):
    return {(s.class_bits, s.numbers["n1"], s.numbers["n2"], s.numbers["n3"]): s.values for s in spectrum.states}


@pytest.mark.parametrize("mu", [(0, 0, 0, 0), (1, 0, 1, 0), (1, 1, 1, 1)])
def test_spectral_parameters_follow_the_numerator(mu):
    params = gen_lame_params((1.0, 2.0, 5.0, 8.0), mu)
    q = np.random.default_rng(5).normal(size=4)
    c = sum(4.0 * q[j] * np.polynomial.polynomial.polyfromroots(np.delete(params.e, j)) for j in range(4))
    u0, u1, u2 = params.u
    energy, lam1, lam2 = spectral_parameters(params, q)
    assert energy == pytest.approx(u0 - c[2], abs=1e-12)
    assert lam1 == pytest.approx(-4.0 * (c[1] - u1), rel=1e-12, abs=1e-10)
    assert lam2 == pytest.approx(6.0 * (u2 - c[0]), rel=1e-12, abs=1e-10)
    assert separation_constants((lam1, lam2)) == pytest.approx((c[1] - u1, u2 - c[0]), rel=1e-12, abs=1e-10)


def test_ellipsoidal_values_move_affinely_with_the_axes():
    base = by_label(full_spectrum(ELLIPSOIDAL, 4))
    shifted = by_label(full_spectrum(SystemSpec(kind="Ellipsoidal", params=(0.0, 1.0, 4.0, 7.0)), 4))
    stretched = by_label(full_spectrum(SystemSpec(kind="Ellipsoidal", params=(3.0, 6.0, 15.0, 24.0)), 4))
    energy = 4 * 6
    for label, values in base.items():
        l1, l2 = separation_constants(values)
        s1, s2 = separation_constants(shifted[label])
        # moving every axis by c = -1
        assert s1 == pytest.approx(l1 - 2.0 * energy, rel=1e-9, abs=1e-8)
        assert s2 == pytest.approx(l2 - l1 + energy, rel=1e-9, abs=1e-8)
        t1, t2 = separation_constants(stretched[label])
        assert (t1, t2) == pytest.approx((3.0 * l1, 9.0 * l2), rel=1e-9)


def prolate_limit_pairs(spectrum, a):
    energy = spectrum.degree * (spectrum.degree + 2)
    const = separated(s.values for s in spectrum.states)
    return np.column_stack([const[:, 1], (const[:, 0] - const[:, 1] - energy) / (a - 1.0)])


def oblate_limit_pairs(spectrum, a):
    energy = spectrum.degree * (spectrum.degree + 2)
    const = separated(s.values for s in spectrum.states)
    g = const[:, 1] / a
    return np.column_stack([g, (const[:, 0] - a * energy - g) / (1.0 - a)])


def limit_deviation(limit, pairs):
    return float(np.abs(limit - pairs[match_pairs(limit, pairs)]).max())


@pytest.mark.parametrize(
    "target,to_pairs", [("Prolate", prolate_limit_pairs), ("Oblate", oblate_limit_pairs)], ids=["Prolate", "Oblate"]
)
def test_ellipsoidal_spectrum_approaches_degenerate_limit(target, to_pairs):
    a, degree = 2.4, 6
    limit_spec = SystemSpec(kind=target, params=(a,))
    limit = np.array([operator_pair_values(s) for s in create_spectrum_solver(limit_spec).full_spectrum(degree).states])
    deviations = []
    for eps in (1e-2, 1e-3, 1e-4):
        spectrum = full_spectrum(degenerate(limit_spec, target, eps), degree)
        assert len(spectrum) == len(limit)
        deviations.append(limit_deviation(limit, to_pairs(spectrum, a)))
    assert deviations[0] > deviations[1] > deviations[2]
    assert deviations[2] < 20.0 * 1e-4 * degree * (degree + 2)


def test_prolate_approaches_spherical_as_a_goes_to_one():
    degree = 6
    energy = degree * (degree + 2)
    spherical = np.array([operator_pair_values(s) for s in spherical_spectrum(degree).states])
    for eps in (1e-2, 1e-3):
        prolate = np.array([operator_pair_values(s) for s in prolate_spectrum(1.0 + eps, degree).states])
        assert limit_deviation(spherical, prolate) <= 2.0 * eps * energy


@pytest.mark.parametrize("ell", [3, 4, 5])
def test_s2_ellipsoidal_is_a_slice_of_lame(ell):
    axes = (0.0, 1.0, 2.4)
    degree = 7
    lame = lame_spectrum(axes, degree)
    slice_g = sorted(
        s.values[1] for s in lame.states if 2 * s.numbers["d"] + sum(s.symmetry[1:]) == ell
    )
    s2 = sorted(s.values[1] for s in s2_ellipsoidal_spectrum(axes, ell).states)
    assert len(slice_g) == 2 * ell + 1
    assert_allclose(slice_g, s2, rtol=1e-10, atol=1e-10)


def test_ellipsoidal_degree_eighteen():
    spectrum = full_spectrum(ELLIPSOIDAL, 18)
    assert len(spectrum) == 19 * 19
    e = ELLIPSOIDAL.params
    for state in spectrum.states:
        roots = np.asarray(state.roots)
        n = (state.numbers["n1"], state.numbers["n2"], state.numbers["n3"])
        assert [int(np.sum((roots > e[j]) & (roots < e[j + 1]))) for j in range(3)] == list(n)
        if roots.size:
            half_gamma = 0.5 * np.asarray(gen_lame_params(e, state.mu).gamma)
            pole = half_gamma / (roots[:, None] - np.asarray(e))
            pair = roots[:, None] - roots[None, :]
            np.fill_diagonal(pair, np.inf)
            residual = pole.sum(axis=1) + (1.0 / pair).sum(axis=1)
            assert np.all(np.abs(residual) <= 1e-9 * (np.abs(pole).sum(axis=1) + np.abs(1.0 / pair).sum(axis=1)))
    points = spectrum.points(scaled=False)
    gaps = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=2) + np.eye(len(points))
    assert gaps.min() > 1e-6
