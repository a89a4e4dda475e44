import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.actions import (
    actions_cylindrical,
    actions_ellipsoidal,
    actions_lame,
    actions_oblate,
    actions_prolate,
    actions_spherical,
    cylindrical_quadrature,
    focus_focus_actions,
    image_boundary,
    inside_image,
    spherical_quadrature,
    state_actions,
    state_etilde,
    turning_points,
    window_action,
)
from core.models import SystemSpec
from core.spectra import create_spectrum_solver
from core.utils.exceptions import InvalidProblem, OutsideImage

S3_SYSTEMS = [
    SystemSpec(kind="Ellipsoidal", params=(1.0, 2.0, 5.0, 8.0)),
    SystemSpec(kind="Prolate", params=(2.4,)),
    SystemSpec(kind="Oblate", params=(2.4,)),
    SystemSpec(kind="Lame", params=(0.0, 1.0, 2.4)),
    SystemSpec(kind="Spherical23"),
    SystemSpec(kind="Cylindrical"),
]


def test_turning_points():
    assert turning_points(-1.0, 3.0, -2.0) == pytest.approx((1.0, 2.0))
    assert turning_points(1.0, 0.0, -4.0) == pytest.approx((-2.0, 2.0))
    # double root reached through rounding
    r1, r2 = turning_points(-1.0, 2.0, -1.0 - 1e-16)
    assert r1 == pytest.approx(1.0) and r2 == pytest.approx(1.0)
    with pytest.raises(OutsideImage):
        turning_points(-1.0, 0.0, -1.0)


def test_window_action():
    assert window_action(lambda s: 1.0 / (4.0 * s * (1.0 - s)), 0.0, 1.0) == pytest.approx(1.0, rel=1e-10)
    assert window_action(lambda s: np.ones_like(s), 0.3, 0.3) == 0.0
    with pytest.raises(OutsideImage):
        window_action(lambda s: -np.ones_like(s), 0.0, 1.0)


@pytest.mark.parametrize("spec", S3_SYSTEMS, ids=lambda s: s.kind)
@pytest.mark.parametrize("degree", [6, 9])
def test_actions_sum_to_sqrt_etilde(spec, degree):
    spectrum = create_spectrum_solver(spec).full_spectrum(degree)
    for state in spectrum.states:
        triple = state_actions(spec, state, "unit")
        assert triple.total == pytest.approx(1.0, abs=1e-6)
        assert min(triple.as_tuple()) >= 0.0


@pytest.mark.parametrize("spec", [SystemSpec(kind="Prolate", params=(2.4,)), SystemSpec(kind="Cylindrical")], ids=lambda s: s.kind)
def test_exact_mode_sums_to_exact_energy(spec):
    spectrum = create_spectrum_solver(spec).full_spectrum(7)
    expected = np.sqrt(1.0 - spectrum.hbar**2)
    for state in spectrum.states:
        assert state_actions(spec, state, "exact").total == pytest.approx(expected, abs=1e-6)


@pytest.mark.parametrize("etilde,f,m", [(1.0, 0.3, 0.2), (1.0, 0.9, 0.0), (0.8, 0.5, -0.4), (1.0, 0.0, 0.0)])
def test_spherical_closed_form_matches_quadrature(etilde, f, m):
    assert_allclose(spherical_quadrature(etilde, f, m).as_tuple(), actions_spherical(etilde, f, m).as_tuple(), atol=1e-8)


@pytest.mark.parametrize("m1,m2", [(0.2, 0.3), (-0.5, 0.1), (0.0, 0.4), (0.3, -0.3)])
def test_cylindrical_closed_form_matches_quadrature(m1, m2):
    assert_allclose(cylindrical_quadrature(1.0, m1, m2).as_tuple(), actions_cylindrical(1.0, m1, m2).as_tuple(), atol=1e-8)


def test_closed_forms():
    assert actions_spherical(1.0, 0.0, 0.0).as_tuple() == pytest.approx((0.0, 1.0, 0.0))
    assert actions_spherical(1.0, 0.75, 0.25).as_tuple() == pytest.approx((0.5, 0.25, 0.25))
    assert actions_cylindrical(1.0, 0.5, -0.25).as_tuple() == pytest.approx((0.5, 0.25, 0.25))


@pytest.mark.parametrize("a", [1.5, 2.4, 5.0])
def test_focus_focus_value(a):
    computed = actions_prolate(a, 1.0, 0.0, 1.0).as_tuple()
    assert_allclose(computed, focus_focus_actions(a).as_tuple(), atol=1e-7)
    assert computed[1] == 0.0


def test_focus_focus_uses_square_root_of_a():
    # asin(1/sqrt(4)) = pi/6
    assert focus_focus_actions(4.0).as_tuple() == pytest.approx((1.0 / 3.0, 0.0, 2.0 / 3.0), abs=1e-12)
    assert actions_prolate(4.0, 1.0, 0.0, 1.0).as_tuple() == pytest.approx((1.0 / 3.0, 0.0, 2.0 / 3.0), abs=1e-7)


def test_focus_focus_rejects_bad_axis():
    with pytest.raises(InvalidProblem):
        focus_focus_actions(1.0)


def test_prolate_and_oblate_circle_actions():
    assert actions_prolate(2.4, 1.0, -0.3, 1.2).J2 == pytest.approx(0.3)
    assert actions_oblate(2.4, 1.0, 0.3, 0.5).J3 == pytest.approx(0.3)


def test_lame_top_state():
    spec = SystemSpec(kind="Lame", params=(0.0, 1.0, 2.4))
    spectrum = create_spectrum_solver(spec).full_spectrum(8)
    state = next(s for s in spectrum.states if s.numbers["d"] == 0 and s.symmetry[1:] == (0, 0, 0))
    h = spectrum.hbar
    assert_allclose(state_actions(spec, state, "unit").as_tuple(), (1.0 - h, 0.0, h), atol=1e-9)
    assert_allclose(state_actions(spec, state, "exact").as_tuple(), (np.sqrt(1.0 - h * h), 0.0, 0.0), atol=1e-7)


def test_lame_actions_do_not_depend_on_axis_placement():
    base = actions_lame((0.0, 1.0, 2.4), 1.0, 0.6, 0.3)
    # g transforms as f1 (E~ - f) + (f2 - f1) g' under a change of axes
    moved = actions_lame((1.0, 3.0, 5.8), 1.0, 0.6, 1.0 * 0.4 + 2.0 * 0.3)
    assert_allclose(moved.as_tuple(), base.as_tuple(), atol=1e-9)


def test_ellipsoidal_state_with_one_axis():
    # the numerator cancels the poles at e3 and e4
    e = (1.0, 2.0, 5.0, 8.0)
    triple = actions_ellipsoidal(e, 1.0, e[2] + e[3], e[2] * e[3])
    assert triple.total == pytest.approx(1.0, abs=1e-8)


def test_outside_image():
    with pytest.raises(OutsideImage):
        actions_spherical(1.0, 1.5, 0.0)
    with pytest.raises(OutsideImage):
        actions_cylindrical(1.0, 0.8, 0.5)
    with pytest.raises(OutsideImage):
        actions_lame((0.0, 1.0, 2.4), 1.0, 1.2, 0.0)


def test_state_etilde():
    state = create_spectrum_solver({"kind": "Cylindrical"}).full_spectrum(3).states[0]
    assert state_etilde(state, "unit") == 1.0
    assert state_etilde(state, "exact") == pytest.approx(1.0 - 1.0 / 16.0)
    with pytest.raises(InvalidProblem):
        state_etilde(state, "other")


def test_state_actions_rejects_s2_and_mismatched_states():
    s2 = SystemSpec(kind="S2Spherical")
    state = create_spectrum_solver(s2).full_spectrum(2).states[0]
    with pytest.raises(InvalidProblem):
        state_actions(s2, state)
    cylindrical = create_spectrum_solver({"kind": "Cylindrical"}).full_spectrum(2).states[0]
    with pytest.raises(InvalidProblem):
        state_actions(SystemSpec(kind="Spherical23"), cylindrical)


@pytest.mark.parametrize("spec", S3_SYSTEMS, ids=lambda s: s.kind)
def test_scaled_spectrum_lies_in_the_classical_image(spec):
    boundary = image_boundary(spec)
    np.testing.assert_allclose(boundary[0], boundary[-1])
    points = create_spectrum_solver(spec).full_spectrum(8).points(scaled=True)
    assert inside_image(boundary, points).all()


def test_prolate_image():
    spec = SystemSpec(kind="Prolate", params=(2.4,))
    boundary = image_boundary(spec)
    assert inside_image(boundary, [[0.0, 1.0], [0.5, 1.7]]).all()
    assert not inside_image(boundary, [[0.0, 2.5], [0.0, -0.1], [1.1, 0.0]]).any()


def test_oblate_image_top_switches_at_the_double_point():
    a = 2.4
    boundary = image_boundary(SystemSpec(kind="Oblate", params=(a,)))
    k = np.sqrt((a - 1.0) / a)
    # both pieces of the top meet at (k, 1/a)
    assert inside_image(boundary, [[k, 1.0 / a - 1e-3], [0.0, a - 1e-6]]).all()
    assert not inside_image(boundary, [[k, 1.0 / a + 1e-3], [0.0, a + 1e-3], [0.9, 0.2]]).any()


def test_inside_image_counts_the_edge():
    square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.0, 0.0]])
    assert inside_image(square, [[0.5, 0.5], [1.0, 0.5], [0.0, 0.0]]).all()
    assert not inside_image(square, [[1.5, 0.5], [0.5, -0.1]]).any()


def test_image_boundary_rejects_s2():
    with pytest.raises(InvalidProblem):
        image_boundary(SystemSpec(kind="S2Spherical"))
