import numpy as np
import pytest

from core.actions import state_actions
from core.models import LatticeCell, SystemSpec, TransportResult
from core.monodromy import (
    circle_loop,
    combined_classes,
    initial_cell,
    polygon_projection,
    refine_loop,
    sublattice,
    transport,
)
from core.spectra import create_spectrum_solver, prolate_spectrum
from core.utils.exceptions import InvalidProblem, LeftLattice

PROLATE = SystemSpec(kind="Prolate", params=(2.4,))


@pytest.fixture(scope="module")
def prolate20():
    return prolate_spectrum(2.4, 20)


def square_grid(step=0.05):
    axis = np.arange(-20, 21) * step
    xx, yy = np.meshgrid(axis, axis)
    return np.column_stack([xx.ravel(), yy.ravel()])


def run_loop(points, center, radius, clockwise=False, waypoints=64):
    loop = circle_loop(center, radius, waypoints, clockwise=clockwise)
    cell = initial_cell(points, loop[0], (0.0, 1.0))
    return transport(points, loop, cell)


def test_circle_loop_is_closed():
    loop = circle_loop((0.0, 1.0), 0.35, 16)
    assert loop.shape == (17, 2)
    np.testing.assert_allclose(loop[0], loop[-1])
    np.testing.assert_allclose(np.linalg.norm(loop - [0.0, 1.0], axis=1), 0.35)
    with pytest.raises(InvalidProblem):
        circle_loop((0.0, 0.0), 0.0)


def test_refine_loop_inserts_midpoints():
    loop = circle_loop((0.0, 0.0), 1.0, 4)
    refined = refine_loop(loop)
    assert refined.shape == (9, 2)
    np.testing.assert_allclose(refined[1], 0.5 * (loop[0] + loop[1]))


def test_initial_cell_on_square_grid():
    cell = initial_cell(square_grid(), (0.01, 0.01))
    assert cell.base == pytest.approx((0.0, 0.0))
    assert cell.v1 == pytest.approx((0.0, 0.05))
    assert cell.v2 == pytest.approx((0.05, 0.0))


def test_square_grid_has_trivial_monodromy():
    result = run_loop(square_grid(), (0.0, 0.0), 0.3)
    assert result.is_identity
    assert result.omega == 0
    assert result.refinements == 0
    assert len(result.cells) == 65


def test_transport_stops_at_a_hole_in_the_lattice():
    points = square_grid()
    points = points[np.linalg.norm(points - [0.0, 0.3], axis=1) > 1e-9]
    with pytest.raises(LeftLattice):
        run_loop(points, (0.0, 0.0), 0.3)


def test_transport_rejects_open_loop():
    points = square_grid()
    loop = circle_loop((0.0, 0.0), 0.3, 16)[:-1]
    cell = initial_cell(points, loop[0])
    with pytest.raises(InvalidProblem):
        transport(points, loop, cell)


def test_transport_rejects_bad_point_sets():
    with pytest.raises(InvalidProblem):
        cell = LatticeCell(base=(0, 0), v1=(1, 0), v2=(0, 1))
        transport(np.zeros((5, 3)), circle_loop((0.0, 0.0), 0.3, 8), cell)


def test_lattice_models():
    with pytest.raises(ValueError):
        LatticeCell(base=(0.0, 0.0), v1=(1.0, 1.0), v2=(2.0, 2.0))
    with pytest.raises(ValueError):
        TransportResult(matrix=((2, 0), (0, 1)))
    assert TransportResult(matrix=((1, 0), (2, 1))).omega == 2
    assert TransportResult(matrix=((1, 0), (-1, 1))).omega == 1


def test_combined_classes():
    assert combined_classes(20) == ((0, 0), (1, 1))
    assert combined_classes(21) == ((1, 0), (0, 1))


def test_sublattice_sizes(prolate20):
    assert len(sublattice(prolate20)) == 121 + 100
    assert len(sublattice(prolate20, combined=False)) == 121
    assert len(sublattice(prolate20, combined=False, single=(1, 1))) == 100


def test_focus_focus_loop_on_combined_lattice(prolate20):
    result = run_loop(sublattice(prolate20).points(), (0.0, 1.0), 0.35)
    # a column at m holds D - |m| + 1 states, so one step in m (two units) shifts the rank by four
    assert result.matrix == ((1, 0), (4, 1))
    assert result.omega == 4
    assert result.refinements == 0


def test_focus_focus_loop_on_single_class(prolate20):
    result = run_loop(sublattice(prolate20, combined=False).points(), (0.0, 1.0), 0.35)
    assert result.matrix == ((1, 0), (2, 1))
    assert result.omega == 2


def test_combined_shift_is_twice_the_single_class_shift(prolate20):
    combined = run_loop(sublattice(prolate20).points(), (0.0, 1.0), 0.35)
    for single in ((0, 0), (1, 1)):
        alone = run_loop(sublattice(prolate20, combined=False, single=single).points(), (0.0, 1.0), 0.35)
        assert alone.matrix[0] == (1, 0)
        assert combined.matrix[1][0] == 2 * alone.matrix[1][0]


@pytest.mark.parametrize("waypoints", [16, 64, 128])
def test_focus_focus_matrix_does_not_depend_on_waypoints(prolate20, waypoints):
    result = run_loop(sublattice(prolate20).points(), (0.0, 1.0), 0.35, waypoints=waypoints)
    assert result.matrix == ((1, 0), (4, 1))
    assert len(result.cells) == waypoints + 1


def test_cells_sit_on_spectrum_points(prolate20):
    points = sublattice(prolate20).points()
    result = run_loop(points, (0.0, 1.0), 0.35)
    for cell in result.cells:
        for corner in (np.array(cell.base), np.add(cell.base, cell.v1), np.add(cell.base, cell.v2)):
            assert np.min(np.linalg.norm(points - corner, axis=1)) < 1e-12


def test_reverse_loop_gives_inverse(prolate20):
    points = sublattice(prolate20).points()
    forward = np.array(run_loop(points, (0.0, 1.0), 0.35).matrix)
    backward = np.array(run_loop(points, (0.0, 1.0), 0.35, clockwise=True).matrix)
    np.testing.assert_array_equal(forward @ backward, np.eye(2, dtype=int))
    assert backward.tolist() == [[1, 0], [-4, 1]]


def test_contractible_loop_is_trivial(prolate20):
    result = run_loop(sublattice(prolate20).points(), (0.0, 1.6), 0.2)
    assert result.is_identity


def test_oblate_has_no_monodromy():
    spectrum = create_spectrum_solver({"kind": "Oblate", "params": [2.4]}).full_spectrum(20)
    result = run_loop(sublattice(spectrum).points(), (0.0, 0.5), 0.18)
    assert result.is_identity


def test_polygon_projection():
    spectrum = prolate_spectrum(2.4, 10)
    actions = [state_actions(PROLATE, s) for s in spectrum.states]
    for axis in ("J1", "J3"):
        projected = polygon_projection(spectrum, actions, axis)
        assert projected.shape == (len(spectrum), 2)
        np.testing.assert_allclose(projected[:, 0], [s.scaled[0] for s in spectrum.states])
        # J1 + J3 = 1 - |m| at E~ = 1
        assert np.all(projected[:, 1] <= 1.0 - np.abs(projected[:, 0]) + 1e-6)


def test_polygon_projection_errors():
    spectrum = prolate_spectrum(2.4, 4)
    actions = [state_actions(PROLATE, s) for s in spectrum.states]
    with pytest.raises(InvalidProblem):
        polygon_projection(spectrum, actions[:-1])
    with pytest.raises(InvalidProblem):
        polygon_projection(spectrum, actions, "J2")
    lame = create_spectrum_solver({"kind": "Lame", "params": [0.0, 1.0, 2.4]}).full_spectrum(2)
    with pytest.raises(InvalidProblem):
        polygon_projection(lame, actions[: len(lame)])
