"""One function per command; each renders the requested format as text."""

from typing import Dict, List, Tuple

import numpy as np

from cli.writers import cells_svg, scatter_svg, ternary_svg, to_csv_text, to_json_text
from core.api import SpectraAPI, SpectraConfig
from core.eigenfunctions import to_text
from core.models import JointSpectrum, QuantumState
from core.oracle import MAX_ORACLE_DEGREE
from core.spectra import class_colour, state_label
from core.utils.exceptions import DimensionGuard, InvalidProblem

ORACLE_CLI_MAX_DEGREE = 8


def _require_2d(config: SpectraConfig, command: str):
    if config.output == "svg":
        raise InvalidProblem(f"'{command}' has no two-dimensional output; use csv or json")


def _state_row(state: QuantumState, spectrum: JointSpectrum, scaled: bool) -> Dict:
    row = {
        "system": state.system,
        "D": state.degree,
        "class": state.class_bits,
        "label": state_label(state),
        **state.numbers,
        f"{spectrum.value_labels[0]}_raw": state.values[0],
        f"{spectrum.value_labels[1]}_raw": state.values[1],
        f"{spectrum.value_labels[0]}_scaled": state.scaled[0],
        f"{spectrum.value_labels[1]}_scaled": state.scaled[1],
    }
    if not scaled:
        row = {k: v for k, v in row.items() if not k.endswith("_scaled")}
    return row


def cmd_spectrum(config: SpectraConfig) -> str:
    """Joint spectrum as CSV rows, a JSON document or a class-coloured scatter plot."""
    api = SpectraAPI(config)
    spectrum = api.spectrum()
    scaled = config.scaling == "hbar-scaled"
    presented = api.present(spectrum.points(scaled=scaled))
    if config.output == "svg":
        colours = [class_colour(s.system, s.class_bits) for s in spectrum.states]
        # the classical image lives in scaled units only
        boundary = api.boundary() if scaled and not api.spec.on_s2 else None
        return scatter_svg(
            presented,
            colours,
            spectrum.value_labels[0],
            spectrum.value_labels[1],
            title=f"{api.spec.label()} D={spectrum.degree}",
            boundary=boundary,
        )
    rows = [_state_row(s, spectrum, scaled) for s in spectrum.states]
    if config.presentation is not None:
        for row, (x, y) in zip(rows, presented):
            row.update({"x_presented": float(x), "y_presented": float(y)})
    if config.output == "json":
        return to_json_text(
            {
                "system": api.spec.kind,
                "params": list(api.spec.params),
                "degree": spectrum.degree,
                "hbar": spectrum.hbar,
                "scaling": config.scaling,
                "states": rows,
            }
        )
    return to_csv_text(rows)


def cmd_actions(config: SpectraConfig) -> str:
    """Spectrum rows with (J1, J2, J3) appended; states outside the image carry an error column."""
    api = SpectraAPI(config)
    spectrum = api.spectrum()
    results = api.actions(spectrum)
    if config.output == "svg":
        kept = [(s, j) for s, j, _ in results if j is not None]
        return ternary_svg(
            np.array([j.as_tuple() for _, j in kept]).reshape(-1, 3),
            [class_colour(s.system, s.class_bits) for s, _ in kept],
            title=f"{api.spec.label()} D={spectrum.degree} actions",
        )
    rows = []
    for state, triple, error in results:
        row = _state_row(state, spectrum, config.scaling == "hbar-scaled")
        j = triple.as_tuple() if triple is not None else (None, None, None)
        row.update({"J1": j[0], "J2": j[1], "J3": j[2], "J_sum": triple.total if triple else None, "error": error})
        rows.append(row)
    if config.output == "json":
        return to_json_text(
            {"system": api.spec.kind, "degree": spectrum.degree, "etilde_mode": config.etilde_mode, "states": rows}
        )
    return to_csv_text(rows)


def cmd_oracle_check(config: SpectraConfig) -> Tuple[str, bool]:
    """
    Calibrate at the configured degree and compare up to D.

    Returns:
        Tuple (JSON report, passed)
    """
    _require_2d(config, "oracle-check")
    if config.degree > ORACLE_CLI_MAX_DEGREE:
        raise DimensionGuard(
            f"oracle-check compares degrees up to {ORACLE_CLI_MAX_DEGREE} (operator cap {MAX_ORACLE_DEGREE}), got {config.degree}"
        )
    cal = min(config.oracle.calibration_degree, config.degree)
    degrees = list(range(cal + 1, config.degree + 1)) or [config.degree]
    config = config.model_copy(update={"oracle": config.oracle.model_copy(update={"calibration_degree": cal, "degrees": degrees})})
    report = SpectraAPI(config).oracle_check()
    return to_json_text(report), bool(report["passed"])


def cmd_monodromy(config: SpectraConfig) -> str:
    """Transport report (matrix and omega) as JSON, or the transported cells as SVG."""
    api = SpectraAPI(config)
    result = api.monodromy()
    if config.output == "svg":
        cells = [(c.base, c.v1, c.v2) for c in result.cells]
        return cells_svg(api.lattice_points(), cells, title=f"{api.spec.label()} transport")
    settings = config.monodromy
    report = {
        "system": api.spec.kind,
        "params": list(api.spec.params),
        "degree": config.degree,
        "center": list(settings.center),
        "radius": settings.radius,
        "combined": settings.combined,
        "matrix": [list(r) for r in result.matrix],
        "omega": result.omega,
        "refinements": result.refinements,
        "initial_cell": result.cells[0].model_dump() if result.cells else None,
    }
    if config.output == "json":
        return to_json_text(report)
    return to_csv_text(
        [{"row": i, "c0": r[0], "c1": r[1], "omega": result.omega} for i, r in enumerate(result.matrix)]
    )


def cmd_pair_gaps(config: SpectraConfig) -> str:
    """Neighbouring lambda gaps per column m, for spotting near-degenerate pairs."""
    _require_2d(config, "pair-gaps")
    api = SpectraAPI(config)
    rows = api.pair_gaps()
    if config.output == "json":
        return to_json_text({"system": api.spec.kind, "params": list(api.spec.params), "degree": config.degree, "gaps": rows})
    return to_csv_text(rows)


def cmd_eigenfunction(config: SpectraConfig) -> str:
    """The polynomial as "coeff  exponents" lines after a commented verification block."""
    _require_2d(config, "eigenfunction")
    api = SpectraAPI(config)
    state, poly, report = api.eigenfunction()
    if config.output == "json":
        return to_json_text(
            {
                "state": state.model_dump(exclude={"roots", "coefficients"}),
                "verification": report,
                "terms": [[c, list(e)] for e, c in sorted(poly.terms.items())],
            }
        )
    header: List[str] = [
        f"# system {state.system} params {list(api.spec.params)}",
        f"# state {state.numbers} class {state.class_bits} values {list(state.values)}",
    ]
    header += [f"# {k} {v}" for k, v in report.items()]
    return "\n".join(header) + "\n" + to_text(poly)


def cmd_counts(config: SpectraConfig) -> str:
    """Per-class counts from the formulas against the enumerated spectrum."""
    _require_2d(config, "counts")
    report = SpectraAPI(config).counts()
    if config.output == "json":
        return to_json_text(report)
    classes = sorted(set(report["predicted"]) | set(report["computed"]))
    rows = [
        {"class": c, "predicted": report["predicted"].get(c, 0), "computed": report["computed"].get(c, 0)}
        for c in classes
    ]
    rows.append({"class": "total", "predicted": report["expected_total"], "computed": report["total"]})
    return to_csv_text(rows)
