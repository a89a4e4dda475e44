from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from core.actions import image_boundary, state_actions
from core.eigenfunctions import HomogPoly, reconstruct, verification_report
from core.models import ActionTriple, JointSpectrum, QuantumState, TransportResult
from core.monodromy import circle_loop, initial_cell, polygon_projection, sublattice, transport
from core.oracle import check_transport
from core.spectra import create_spectrum_solver, pair_gaps
from core.api.config import SpectraConfig
from core.utils.exceptions import InvalidProblem, NumericalError, SeparableError
from logger import Logger


class SpectraAPI:
    """Facade over the spectrum solvers, actions, eigenfunctions, oracle and monodromy."""

    def __init__(self, config: Union[SpectraConfig, dict]):
        """
        Initialize the Spectra API.

        Args:
            config: SpectraConfig instance or dict with configuration.

        Example with dict:
            api = SpectraAPI({
                "system": {"Prolate": {"params": [2.4]}},
                "degree": 20,
                "seed": 42,
            })
            spectrum = api.spectrum()
        """
        if isinstance(config, dict):
            config = SpectraConfig(**config)
        self.config = config

        Logger.set_debug(config.debug)
        Logger.debug("Initializing Spectra API...", "[SpectraAPI]")

        self.solver = create_spectrum_solver(config.system, seed=config.seed)
        self.spec = self.solver.spec
        self._cache: Dict[int, JointSpectrum] = {}
        Logger.debug(f"Spectra API ready for {self.spec.label()} at D={config.degree}", "[SpectraAPI]")

    def spectrum(self, degree: Optional[int] = None, filtered: bool = True, permuted: bool = True) -> JointSpectrum:
        """
        Joint spectrum of one degree, optionally restricted to the configured classes.

        Args:
            degree: Degree to compute (defaults to the configured one)
            filtered: Apply the configured class filter
            permuted: Relabel the axes by the configured permutation
        """
        degree = self.config.degree if degree is None else degree
        if degree not in self._cache:
            Logger.debug(f"Computing {self.spec.label()} spectrum at D={degree}...", "[SpectraAPI]")
            self._cache[degree] = self.solver.full_spectrum(degree)
            Logger.debug(f"{len(self._cache[degree])} states computed", "[SpectraAPI]")
        spectrum = self._cache[degree]
        if permuted and self.config.permutation is not None:
            spectrum = spectrum.permuted(self.config.permutation)
        return spectrum.filter_classes(self.config.classes) if filtered else spectrum

    def counts(self, degree: Optional[int] = None) -> Dict[str, object]:
        """
        Per-class counts from the counting formulas next to the enumerated ones.

        Returns:
            Dict with "predicted", "computed", "total" and "match"
        """
        degree = self.config.degree if degree is None else degree
        predicted = self.solver.class_counts(degree)
        computed = self.spectrum(degree, filtered=False).class_counts()
        return {
            "system": self.spec.kind,
            "degree": degree,
            "predicted": predicted,
            "computed": computed,
            "total": sum(computed.values()),
            "expected_total": self.solver.state_count(degree),
            "match": predicted == computed and sum(computed.values()) == self.solver.state_count(degree),
        }

    def actions(self, spectrum: Optional[JointSpectrum] = None) -> List[Tuple[QuantumState, Optional[ActionTriple], str]]:
        """
        Action triple of every state; states outside the image are flagged, not fatal.

        Returns:
            List of (state, actions or None, error message or "")
        """
        if self.spec.on_s2:
            raise InvalidProblem(f"{self.spec.kind} lives on S^2 and has no action triangle")
        spectrum = spectrum if spectrum is not None else self.spectrum()
        rows = []
        for state in spectrum.states:
            try:
                rows.append((state, state_actions(self.spec, state, self.config.etilde_mode), ""))
            except NumericalError as e:
                Logger.warning(f"State {state.key}: {e}", "[SpectraAPI]")
                rows.append((state, None, str(e)))
        return rows

    def find_state(self, selector: Optional[Dict[str, int]] = None) -> QuantumState:
        """
        The unique state whose quantum numbers contain the selector.

        Raises:
            InvalidProblem: If no state or several states match
        """
        selector = selector if selector is not None else (self.config.state or {})
        matches = [
            s for s in self.spectrum().states if all(s.numbers.get(k) == v for k, v in selector.items())
        ]
        if len(matches) != 1:
            raise InvalidProblem(f"Selector {selector} matches {len(matches)} states of {self.spec.label()}")
        return matches[0]

    def eigenfunction(self, selector: Optional[Dict[str, int]] = None) -> Tuple[QuantumState, HomogPoly, Dict[str, object]]:
        """Reconstruct one eigenfunction and its verification block, in the permuted axes if configured."""
        state = self.find_state(selector)
        perm = self.config.permutation
        original = state.permuted(tuple(int(i) for i in np.argsort(perm))) if perm is not None else state
        try:
            poly = reconstruct(original)
        except SeparableError as e:
            Logger.error(f"Reconstruction failed for {state.key}: {e}", "[SpectraAPI]")
            raise
        if perm is not None:
            poly = poly.permute(perm)
        return state, poly, verification_report(state, poly)

    def oracle_check(self) -> Dict:
        """Calibrate at a low degree and compare with the operator matrices at higher degrees."""
        oracle = self.config.oracle
        try:
            report = check_transport(
                self.spec,
                degrees=oracle.degrees,
                calibration_degree=oracle.calibration_degree,
                seed=self.config.seed,
            )
        except SeparableError as e:
            Logger.error(f"Oracle check failed for {self.spec.label()}: {e}", "[SpectraAPI]")
            raise
        status = "passed" if report["passed"] else "FAILED"
        Logger.debug(f"Oracle check {status}: max deviation {report['max_deviation']:.2e}", "[SpectraAPI]")
        return report

    def lattice_points(self) -> np.ndarray:
        settings = self.config.monodromy
        spectrum = self.spectrum(filtered=False)
        if self.spec.kind in ("Prolate", "Oblate"):
            spectrum = sublattice(spectrum, combined=settings.combined, single=settings.single_class)
        elif self.config.classes is not None:
            spectrum = spectrum.filter_classes(self.config.classes)
        return spectrum.points(scaled=True)

    def monodromy(self, reverse: bool = False) -> TransportResult:
        """Transport a unit cell around the configured loop."""
        settings = self.config.monodromy
        points = self.lattice_points()
        loop = circle_loop(settings.center, settings.radius, settings.waypoints, clockwise=reverse)
        cell = initial_cell(points, loop[0], settings.direction_hint)
        Logger.debug(
            f"Transporting cell at {cell.base} around {settings.center} (r={settings.radius})", "[SpectraAPI]"
        )
        try:
            result = transport(points, loop, cell)
        except SeparableError as e:
            Logger.error(f"Transport failed: {e}", "[SpectraAPI]")
            raise
        Logger.debug(f"Monodromy matrix {result.matrix}, omega={result.omega}", "[SpectraAPI]")
        return result

    def pair_gaps(self) -> List[Dict]:
        """Neighbouring lambda gaps per column m of the configured spectrum."""
        return pair_gaps(self.spectrum())

    def boundary(self) -> np.ndarray:
        """Momentum map image boundary in scaled coordinates, through the presentation map."""
        return self.present(image_boundary(self.spec))

    def present(self, points: np.ndarray) -> np.ndarray:
        """Apply the configured presentation map (identity when unset)."""
        affine = self.config.presentation
        return affine.apply(points) if affine is not None else np.asarray(points, dtype=float)

    def polygon(self, axis: str = "J1") -> np.ndarray:
        """(m, J1) or (m, J3) projection of the action map."""
        spectrum = self.spectrum()
        rows = [(s, j) for s, j, _ in self.actions(spectrum) if j is not None]
        kept = spectrum.model_copy(update={"states": [s for s, _ in rows]})
        return polygon_projection(kept, [j for _, j in rows], axis)
