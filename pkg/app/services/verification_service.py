"""Oracle suite cross-checking every closed form against an independent route"""

import logging
import math
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.exceptions import OutOfDomain
from app.models import CheckResult, DetectorParams, QfiValue, Trajectory, validate
from app.services import correlations, equilibrium, lindblad, metrology, vacuum
from app.utils.pauli import ket, projector

logger = logging.getLogger(__name__)

EigenvalueFn = Callable[[float, float], Sequence[float]]
QfiFn = Callable[[DetectorParams], QfiValue]

# (omega, beta, alpha) subsample of {1, 3, 10} x {1, 10} x {-1, -6}; at omega = 10 the ratio rounds to +-1
LINDBLAD_POINTS: Tuple[Tuple[float, float, float], ...] = (
    (1.0, 1.0, -1.0), (1.0, 10.0, -6.0), (1.0, 1.0, -6.0),
    (3.0, 10.0, -1.0), (3.0, 1.0, -6.0),
    (10.0, 1.0, -1.0), (10.0, 10.0, -1.0), (10.0, 1.0, -6.0), (10.0, 10.0, -6.0),
)

FD_ORDER_POINT = (3.0, 10.0, -6.0, 1.0)


def default_eigenvalues(T: float, tau: float) -> Sequence[float]:
    return equilibrium.eigenvalues_from_complements(1.0 - T, 1.0 + T, tau)


def relative_error(value: float, reference: float) -> float:
    if reference == 0.0:
        return abs(value)
    return abs(value - reference) / abs(reference)


class VerificationService:
    """
    Runs every oracle check and reports measured defects.

    The eigenvalue and closed-form QFI routes are injectable so that
    deliberately wrong formulas can be shown to fail.
    """

    def __init__(
        self,
        config: NumericsConfig = DEFAULT_CONFIG,
        tolerance_scale: float = 1.0,
        eigenvalues: EigenvalueFn = default_eigenvalues,
        qfi_closed: QfiFn = metrology.qfi_closed,
        seed: int = 20240611,
        random_points: int = 1000,
        lindblad_points: Sequence[Tuple[float, float, float]] = LINDBLAD_POINTS
    ):
        if not tolerance_scale > 0:
            raise OutOfDomain("tol", tolerance_scale, "(0, inf)")
        self.config = config
        self.tolerance_scale = tolerance_scale
        self.eigenvalues = eigenvalues
        self.qfi_closed = qfi_closed
        self.seed = seed
        self.random_points = random_points
        self.lindblad_points = tuple(lindblad_points)
        self._lindblad_cache: Optional[Tuple[float, Optional[str], float, Optional[str]]] = None

    def run_all(self) -> List[CheckResult]:
        """Run every check in a fixed order"""
        checks = [
            self.check_bd_limit,
            self.check_non_thermal,
            self.check_eigenvalue_trace,
            self.check_state_routes,
            self.check_spectral_eigensolve,
            self.check_special_points,
            self.check_qfi_closed_route,
            self.check_qfi_fd_route,
            self.check_qfi_dense_route,
            self.check_fd_order,
            self.check_lqu_oracle,
            self.check_pi_off_diagonal,
            self.check_lindblad_fixed_point,
            self.check_lindblad_tau_conservation,
        ]
        results = []
        for check in checks:
            result = check()
            logger.info(result.report_line())
            results.append(result)

        failed = sum(not result.passed for result in results)
        logger.info(f"Verification finished: {len(results) - failed} passed, {failed} failed")
        return results

    # helpers

    def _result(self, name: str, defect: float, tolerance: float, detail: Optional[str] = None) -> CheckResult:
        bound = tolerance * self.tolerance_scale
        return CheckResult(
            name=name,
            passed=bool(math.isfinite(defect) and defect <= bound),
            defect=float(defect),
            tolerance=bound,
            detail=detail
        )

    def _rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def _random_params(self, count: int) -> Iterable[DetectorParams]:
        rng = self._rng()
        for _ in range(count):
            yield validate(
                float(np.exp(rng.uniform(np.log(0.5), np.log(3.0)))),
                float(np.exp(rng.uniform(np.log(0.1), np.log(5.0)))),
                float(rng.uniform(-10.0, -0.1)),
                float(rng.uniform(-2.99, 1.0)),
            )

    @staticmethod
    def _state_grid() -> List[Tuple[float, float]]:
        ratios = [0.0] + [float(T) for T in np.linspace(-0.95, 0.95, 9)]
        taus = [float(tau) for tau in np.linspace(-3.0, 1.0, 9)]
        return [(T, tau) for T in ratios for tau in taus]

    # vacuum

    def check_bd_limit(self) -> CheckResult:
        """Detailed balance and T = tanh(beta omega / 2) at alpha = -50"""
        rng = self._rng()
        worst, where = 0.0, None
        for _ in range(100):
            p = validate(
                float(np.exp(rng.uniform(np.log(0.01), np.log(5.0)))),
                float(np.exp(rng.uniform(np.log(0.01), np.log(50.0)))),
                -50.0,
                0.0,
            )
            defect = max(abs(vacuum.ratio(p) - math.tanh(0.5 * p.beta * p.omega)), vacuum.kms_defect(p))
            if defect >= worst:
                worst, where = defect, f"omega={p.omega:.4g}, beta={p.beta:.4g}"
        return self._result("bd_limit", worst, 1e-12, where)

    def check_non_thermal(self) -> CheckResult:
        """The alpha-vacuum at finite alpha breaks detailed balance"""
        defect = vacuum.kms_defect(validate(1.0, 2.0, -1.0, 0.0))
        threshold = 0.01
        return CheckResult(
            name="kms_non_thermal",
            passed=defect > threshold,
            defect=defect,
            tolerance=threshold,
            detail="lower bound at omega=1, beta=2, alpha=-1"
        )

    # equilibrium

    def check_eigenvalue_trace(self) -> CheckResult:
        worst, where = 0.0, None
        for T, tau in self._state_grid():
            defect = abs(sum(self.eigenvalues(T, tau)) - 1.0)
            if defect > worst:
                worst, where = defect, f"T={T:g}, tau={tau:g}"
        return self._result("eigenvalue_trace", worst, 1e-12, where)

    def check_state_routes(self) -> CheckResult:
        worst, where = 0.0, None
        for T, tau in self._state_grid():
            direct = equilibrium.xstate(T, tau).to_array()
            bloch = equilibrium.xstate_via_bloch(T, tau).entries
            defect = float(np.max(np.abs(direct - bloch)))
            if defect > worst:
                worst, where = defect, f"T={T:g}, tau={tau:g}"
        return self._result("state_routes", worst, 1e-14, where)

    def check_spectral_eigensolve(self) -> CheckResult:
        worst, where = 0.0, None
        for T, tau in self._state_grid():
            closed = np.sort(np.asarray(self.eigenvalues(T, tau), dtype=float))
            dense = np.linalg.eigvalsh(equilibrium.xstate(T, tau).to_array())
            defect = float(np.max(np.abs(closed - dense)))
            if defect > worst:
                worst, where = defect, f"T={T:g}, tau={tau:g}"
        return self._result("spectral_eigensolve", worst, 1e-12, where)

    def check_special_points(self) -> CheckResult:
        """I/4 carries no LQU; the singlet has zero QFI and unit LQU"""
        worst = abs(correlations.lqu_closed(0.0, 0.0).value)
        rng = self._rng()
        for _ in range(100):
            p = validate(
                float(np.exp(rng.uniform(np.log(0.1), np.log(10.0)))),
                float(np.exp(rng.uniform(np.log(0.1), np.log(30.0)))),
                float(rng.uniform(-12.0, -0.5)),
                -3.0,
            )
            worst = max(
                worst,
                abs(self.qfi_closed(p).value),
                abs(correlations.lqu_closed(vacuum.ratio(p), -3.0).value - 1.0),
            )
        return self._result("special_points", worst, 1e-12)

    # metrology

    def _route_check(self, name: str, route: QfiFn, tolerance: float) -> CheckResult:
        worst, where = 0.0, None
        for p in self._random_params(self.random_points):
            try:
                defect = relative_error(route(p).value, metrology.qfi_spectral(p).value)
            except (ValueError, ArithmeticError) as e:
                # a route that cannot even produce a valid QFI fails outright
                logger.warning(f"{name} raised at {p}: {e}")
                defect = math.inf
            if defect > worst:
                worst, where = defect, f"omega={p.omega:.4g}, beta={p.beta:.4g}, alpha={p.alpha:.4g}, tau={p.tau:.4g}"
        return self._result(name, worst, tolerance, where)

    def check_qfi_closed_route(self) -> CheckResult:
        return self._route_check("qfi_closed_route", self.qfi_closed, 1e-10)

    def check_qfi_fd_route(self) -> CheckResult:
        return self._route_check("qfi_fd_route", lambda p: metrology.qfi_fd(p, config=self.config), 1e-6)

    def check_qfi_dense_route(self) -> CheckResult:
        worst, where = 0.0, None
        for omega, beta, alpha in self.lindblad_points:
            for tau in (-2.0, 0.0, 0.5):
                p = validate(omega, beta, alpha, tau)
                if abs(vacuum.ratio_exponent(p)) > 10.0:
                    continue
                defect = relative_error(metrology.qfi_dense(p, config=self.config).value, metrology.qfi_spectral(p).value)
                if defect > worst:
                    worst, where = defect, f"omega={omega:g}, beta={beta:g}, alpha={alpha:g}, tau={tau:g}"
        return self._result("qfi_dense_route", worst, 1e-6, where)

    def check_fd_order(self) -> CheckResult:
        """Halving h cuts the finite-difference error by about four"""
        p = validate(*FD_ORDER_POINT)
        exact = metrology.qfi_spectral(p).value
        coarse = abs(metrology.qfi_fd(p, 1e-4).value - exact)
        fine = abs(metrology.qfi_fd(p, 5e-5).value - exact)
        order = coarse / fine if fine > 0 else math.inf
        return self._result("fd_convergence_order", abs(order - 4.0), 1.0, f"error ratio {order:.4g}")

    # correlations

    @staticmethod
    def _lqu_grid() -> List[Tuple[float, float]]:
        return [
            (float(T), float(tau))
            for T in np.linspace(-0.95, 0.95, 20)
            for tau in np.linspace(-3.0, 1.0, 20)
        ]

    def check_lqu_oracle(self) -> CheckResult:
        worst, where = 0.0, None
        for T, tau in self._lqu_grid():
            oracle = correlations.lqu_oracle(equilibrium.xstate(T, tau).to_array(), self.config)
            defect = abs(oracle.value - correlations.lqu_closed(T, tau).value)
            if defect > worst:
                worst, where = defect, f"T={T:.4g}, tau={tau:.4g}"
        return self._result("lqu_oracle", worst, 1e-10, where)

    def check_pi_off_diagonal(self) -> CheckResult:
        worst, where = 0.0, None
        for T, tau in self._lqu_grid():
            pi = correlations.pi_matrix(equilibrium.xstate(T, tau).to_array(), config=self.config)
            defect = float(np.max(np.abs(pi - np.diag(np.diag(pi)))))
            if defect > worst:
                worst, where = defect, f"T={T:.4g}, tau={tau:.4g}"
        return self._result("pi_off_diagonal", worst, 1e-12, where)

    # lindblad

    @staticmethod
    def initial_states() -> List[Tuple[str, np.ndarray]]:
        return [
            ("|00>", projector(ket("00"))),
            ("I/4", np.eye(4, dtype=complex) / 4.0),
            ("bell(0.3,-0.2,0.4)", lindblad.bell_diagonal(0.3, -0.2, 0.4).entries),
        ]

    def _trajectories(self) -> Iterable[Tuple[str, float, Trajectory]]:
        for omega, beta, alpha in self.lindblad_points:
            coefficients = lindblad.coefficients(validate(omega, beta, alpha, 0.0))
            t_end = self.config.lindblad_horizon_factor / coefficients.kappa_plus
            for label, rho0 in self.initial_states():
                where = f"omega={omega:g}, beta={beta:g}, alpha={alpha:g}, rho0={label}"
                trajectory = lindblad.integrate(rho0, coefficients, t_end, config=self.config)
                yield where, equilibrium.tau_of_state(rho0), trajectory

    def _lindblad_summary(self) -> Tuple[float, Optional[str], float, Optional[str]]:
        """Worst final distance and worst tau drift over all trajectories, computed once"""
        if self._lindblad_cache is None:
            distance, distance_at, drift, drift_at = 0.0, None, 0.0, None
            for label, tau0, trajectory in self._trajectories():
                if trajectory.final_distance >= distance:
                    distance, distance_at = trajectory.final_distance, label
                worst_tau = max(abs(tau - tau0) for tau in trajectory.taus)
                if worst_tau >= drift:
                    drift, drift_at = worst_tau, label
            self._lindblad_cache = (distance, distance_at, drift, drift_at)
        return self._lindblad_cache

    def check_lindblad_fixed_point(self) -> CheckResult:
        distance, where, _, _ = self._lindblad_summary()
        return self._result("lindblad_fixed_point", distance, self.config.convergence_tol, where)

    def check_lindblad_tau_conservation(self) -> CheckResult:
        _, _, drift, where = self._lindblad_summary()
        return self._result("lindblad_tau_conservation", drift, 1e-8, where)
