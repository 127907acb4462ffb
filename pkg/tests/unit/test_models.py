"""
Unit tests for pydantic models.

This module tests parameter validation, state invariants, result models
and the sweep/figure models with edge cases and error conditions.
"""

from typing import Any, Dict, List

import numpy as np
import pytest
from pydantic import ValidationError

from app.config import NumericsConfig
from app.exceptions import OutOfDomain
from app.models import (
    SWEEP_COLUMNS,
    CheckResult,
    DensityMatrix4,
    DetectorParams,
    FigurePanel,
    KossakowskiSpectrum,
    LindbladCoeffs,
    LquValue,
    PeakResult,
    QfiValue,
    SpectralDecomp,
    SweepSpec,
    SweepTable,
    Trajectory,
    XState,
    as_array,
    bloch_to_matrix,
    validate,
)
from app.utils.pauli import singlet
from tests.utils.test_data import TestDataFactory


class TestDetectorParams:
    """Test class for DetectorParams and validate."""

    def test_valid_point(self) -> None:
        params = validate(3.0, 10.0, -6.0, 1.0)

        assert params == DetectorParams(omega=3.0, beta=10.0, alpha=-6.0, tau=1.0)
        assert params.alpha_abs == 6.0

    @pytest.mark.parametrize("tau", [-3.0, 1.0])
    def test_tau_bounds_are_inclusive(self, tau: float) -> None:
        assert validate(1.0, 1.0, -1.0, tau).tau == tau

    @pytest.mark.parametrize("field", ["omega", "beta", "alpha", "tau"])
    def test_out_of_domain_names_field(self, field: str, invalid_param_samples: Dict[str, List[Any]]) -> None:
        """Each invalid value raises OutOfDomain naming the offending field."""
        base = {"omega": 1.0, "beta": 1.0, "alpha": -1.0, "tau": 0.0}
        for value in invalid_param_samples[field]:
            raw = dict(base, **{field: value})
            with pytest.raises(OutOfDomain) as exc_info:
                validate(**raw)
            assert exc_info.value.field == field

    def test_every_violation_is_reported(self) -> None:
        with pytest.raises(OutOfDomain) as exc_info:
            validate(-1.0, 1.0, 2.0, 5.0)

        fields = [violation[0] for violation in exc_info.value.violations]
        assert fields == ["omega", "alpha", "tau"]
        assert "omega" in str(exc_info.value) and "tau" in str(exc_info.value)

    def test_out_of_domain_is_value_error(self) -> None:
        with pytest.raises(ValueError):
            validate(1.0, 0.0, -1.0, 0.0)

    def test_with_beta_keeps_other_fields(self, sample_params: DetectorParams) -> None:
        moved = sample_params.with_beta(2.5)

        assert moved.beta == 2.5
        assert (moved.omega, moved.alpha, moved.tau) == (sample_params.omega, sample_params.alpha, sample_params.tau)

    def test_params_are_frozen(self, sample_params: DetectorParams) -> None:
        with pytest.raises(ValidationError):
            sample_params.beta = 1.0


class TestKossakowskiModels:
    """Test class for KossakowskiSpectrum and LindbladCoeffs."""

    def test_consistent_spectrum(self) -> None:
        spectrum = KossakowskiSpectrum(
            y_plus=3.0, y_minus=1.0, sigma_plus=2.0, sigma_minus=1.0, ratio=0.5, ratio_gap=0.75
        )
        assert spectrum.ratio == 0.5

    def test_inconsistent_spectrum_rejected(self) -> None:
        with pytest.raises(ValidationError):
            KossakowskiSpectrum(
                y_plus=3.0, y_minus=1.0, sigma_plus=2.5, sigma_minus=1.0, ratio=0.4, ratio_gap=0.84
            )

    def test_ratio_bounded(self) -> None:
        with pytest.raises(ValidationError):
            KossakowskiSpectrum(
                y_plus=3.0, y_minus=1.0, sigma_plus=2.0, sigma_minus=1.0, ratio=1.5, ratio_gap=0.0
            )

    def test_lindblad_coeffs_ratio(self) -> None:
        coeffs = LindbladCoeffs(kappa_plus=2.0, kappa_minus=-1.0, tau_k=0.3, omega=1.0)
        assert coeffs.ratio == -0.5

    @pytest.mark.parametrize("kappa_minus", [2.0, -2.0])
    def test_lindblad_coeffs_accept_saturated_ratio(self, kappa_minus: float) -> None:
        """Once T rounds to +-1 the rates coincide in magnitude."""
        coeffs = LindbladCoeffs(kappa_plus=2.0, kappa_minus=kappa_minus, tau_k=0.0, omega=10.0)
        assert abs(coeffs.ratio) == 1.0

    @pytest.mark.parametrize("kappa_minus", [2.5, -3.0])
    def test_lindblad_coeffs_reject_excess_rate(self, kappa_minus: float) -> None:
        with pytest.raises(ValidationError):
            LindbladCoeffs(kappa_plus=2.0, kappa_minus=kappa_minus, tau_k=0.0, omega=1.0)


class TestDensityMatrix4:
    """Test class for DensityMatrix4 validation."""

    def test_valid_state(self) -> None:
        rho = DensityMatrix4(entries=np.eye(4) / 4.0)

        assert rho.entries.dtype == complex
        assert np.allclose(rho.eigenvalues(), 0.25)

    def test_entries_are_read_only(self) -> None:
        rho = DensityMatrix4(entries=np.eye(4) / 4.0)
        with pytest.raises(ValueError):
            rho.entries[0, 0] = 1.0

    @pytest.mark.parametrize("matrix,message", [
        (np.eye(3) / 3.0, "4x4"),
        (np.eye(4) / 2.0, "trace"),
        (np.diag([1.2, -0.2, 0.0, 0.0]), "eigenvalue"),
        (np.eye(4) / 4.0 + np.triu(np.ones((4, 4)), 1) * 0.01, "Hermitian"),
    ])
    def test_invalid_states_rejected(self, matrix: np.ndarray, message: str) -> None:
        with pytest.raises(ValidationError) as exc_info:
            DensityMatrix4(entries=matrix)
        assert message in str(exc_info.value)

    def test_relaxed_positivity_floor(self) -> None:
        """Integrator samples may carry tiny negative eigenvalues."""
        matrix = np.diag([0.5 + 1e-9, 0.5, 0.0, -1e-9])

        with pytest.raises(ValidationError):
            DensityMatrix4(entries=matrix)
        assert DensityMatrix4.from_array(matrix, psd_tol=1e-8).entries[3, 3] == -1e-9

    def test_as_array_accepts_both_forms(self) -> None:
        raw = np.eye(4) / 4.0
        assert np.array_equal(as_array(DensityMatrix4(entries=raw)), raw)
        assert as_array(raw).dtype == complex


class TestBlochToMatrix:
    """Test class for assembling states from Bloch coefficients."""

    def test_maximally_mixed(self) -> None:
        rho = bloch_to_matrix(0.0, (0.0, 0.0, 0.0))

        assert isinstance(rho, DensityMatrix4)
        assert np.allclose(rho.entries, np.eye(4) / 4.0, atol=1e-15)

    def test_singlet(self) -> None:
        assert np.allclose(bloch_to_matrix(0.0, (-1.0, -1.0, -1.0)).entries, singlet(), atol=1e-15)

    def test_rejects_non_state(self) -> None:
        with pytest.raises(ValidationError):
            bloch_to_matrix(0.0, (1.0, 1.0, 1.0))

    def test_superposition(self) -> None:
        """Convex mixtures of coefficients give the same mixture of states."""
        rng = np.random.default_rng(TestDataFactory.SEED)
        for _ in range(20):
            # 2 |rho3| + sum |rho_ii| <= 1 keeps every draw a state
            a, b = rng.uniform(-0.2, 0.2, size=(2, 4))
            weight = float(rng.uniform())
            mixed = weight * a + (1.0 - weight) * b

            expected = (
                weight * bloch_to_matrix(a[0], a[1:]).entries
                + (1.0 - weight) * bloch_to_matrix(b[0], b[1:]).entries
            )
            assert np.allclose(bloch_to_matrix(mixed[0], mixed[1:]).entries, expected, atol=1e-15)


class TestXStateAndSpectrum:
    """Test class for XState and SpectralDecomp invariants."""

    def test_xstate_to_array_layout(self) -> None:
        state = XState(eta_minus=0.1, eta_plus=0.5, eta_22=0.2, eta_23=-0.05)
        matrix = state.to_array()

        assert matrix[0, 0] == 0.1 and matrix[3, 3] == 0.5
        assert matrix[1, 2] == matrix[2, 1] == -0.05
        assert state.to_density_matrix().entries.shape == (4, 4)

    @pytest.mark.parametrize("entries", [
        {"eta_minus": 0.5, "eta_plus": 0.5, "eta_22": 0.1, "eta_23": 0.0},
        {"eta_minus": -0.1, "eta_plus": 0.5, "eta_22": 0.3, "eta_23": 0.0},
        {"eta_minus": 0.2, "eta_plus": 0.2, "eta_22": 0.3, "eta_23": 0.4},
    ])
    def test_xstate_invariants(self, entries: Dict[str, float]) -> None:
        with pytest.raises(ValidationError):
            XState(**entries)

    def test_spectral_decomp_reconstruct(self) -> None:
        decomp = SpectralDecomp(mu=(0.25, 0.25, 0.25, 0.25))
        assert np.allclose(decomp.reconstruct(), np.eye(4) / 4.0)

    def test_spectral_decomp_rejects_bad_sum(self) -> None:
        """Eigenvalues summing to 7/4 are rejected."""
        with pytest.raises(ValidationError):
            SpectralDecomp(mu=(0.25, 0.25, 1.0, 0.25))


class TestResultModels:
    """Test class for QFI, peak, LQU and check results."""

    def test_qfi_rejects_negative_and_nan(self) -> None:
        with pytest.raises(ValidationError):
            QfiValue(value=-1e-3)
        with pytest.raises(ValidationError):
            QfiValue(value=float("nan"))

    def test_peak_result(self) -> None:
        peak = PeakResult(beta_star=5.0, qfi_star=66.0, bracket=(0.05, 30.0), evaluations=90)
        assert peak.bracket == (0.05, 30.0)

    def test_lqu_bounded_by_thetas(self) -> None:
        assert LquValue(value=0.0, theta11=1.0, theta33=1.0).value == 0.0
        with pytest.raises(ValidationError):
            LquValue(value=0.5, theta11=0.9, theta33=0.2)

    @pytest.mark.parametrize("passed,detail,expected", [
        (True, None, "PASS trace: defect=1.000e-15 tol=1.0e-12"),
        (False, "T=0", "FAIL trace: defect=1.000e-15 tol=1.0e-12 (T=0)"),
    ])
    def test_report_line(self, passed: bool, detail: str, expected: str) -> None:
        result = CheckResult(name="trace", passed=passed, defect=1e-15, tolerance=1e-12, detail=detail)
        assert result.report_line() == expected


class TestTrajectory:
    """Test class for Trajectory sample checks."""

    @staticmethod
    def _state() -> DensityMatrix4:
        return DensityMatrix4(entries=np.eye(4) / 4.0)

    def test_valid_trajectory(self) -> None:
        trajectory = Trajectory(
            times=[0.5, 1.0], states=[self._state()] * 2, distances=[0.1, 0.0],
            taus=[0.0, 0.0], converged=True, final_distance=0.0
        )
        assert len(trajectory.states) == 2

    def test_length_mismatch(self) -> None:
        with pytest.raises(ValidationError):
            Trajectory(
                times=[0.5, 1.0], states=[self._state()], distances=[0.1, 0.0],
                taus=[0.0, 0.0], converged=True, final_distance=0.0
            )

    def test_times_must_increase(self) -> None:
        with pytest.raises(ValidationError):
            Trajectory(
                times=[1.0, 1.0], states=[self._state()] * 2, distances=[0.1, 0.0],
                taus=[0.0, 0.0], converged=True, final_distance=0.0
            )


class TestSweepModels:
    """Test class for SweepSpec, SweepRow, SweepTable and FigurePanel."""

    def test_spec_accepts_from_to_aliases(self, test_data_factory: TestDataFactory) -> None:
        spec = test_data_factory.create_sweep_spec()

        assert (spec.start, spec.stop) == (0.5, 5.0)
        assert spec.fixed() == {"omega": 3.0, "alpha_abs": 6.0, "tau": -2.0}

    def test_spec_accepts_field_names(self) -> None:
        spec = SweepSpec(varying="tau", start=-2.0, stop=1.0, steps=3, omega=1.0, beta=1.0, alpha_abs=1.0)
        assert spec.fixed() == {"omega": 1.0, "beta": 1.0, "alpha_abs": 1.0}

    @pytest.mark.parametrize("overrides,message", [
        ({"from": 5.0, "to": 0.5}, "from < to"),
        ({"from": 1.0, "to": 1.0}, "from < to"),
        ({"scale": "log", "from": 0.0}, "from > 0"),
        ({"omega": None}, "omega"),
        ({"steps": 1}, "steps"),
        ({"varying": "gamma"}, "varying"),
    ])
    def test_spec_rejects(self, test_data_factory: TestDataFactory, overrides: Dict[str, Any], message: str) -> None:
        with pytest.raises(ValidationError) as exc_info:
            test_data_factory.create_sweep_spec(**overrides)
        assert message in str(exc_info.value)

    def test_row_values_follow_column_order(self, test_data_factory: TestDataFactory) -> None:
        row = test_data_factory.create_sweep_row(qfi=1.5, kms_defect=2.0)
        values = row.values()

        assert len(values) == len(SWEEP_COLUMNS)
        assert values[SWEEP_COLUMNS.index("qfi")] == 1.5
        assert values[-1] == 2.0

    @pytest.mark.parametrize("column,value", [("lqu", 1.5), ("qfi", -1.0), ("t_ratio", 1.01), ("kms_defect", -0.1)])
    def test_row_bounds(self, test_data_factory: TestDataFactory, column: str, value: float) -> None:
        with pytest.raises(ValidationError):
            test_data_factory.create_sweep_row(**{column: value})

    @pytest.mark.parametrize("name", ["", "a b", "../escape", "fig/2"])
    def test_table_name_pattern(self, name: str) -> None:
        with pytest.raises(ValidationError):
            SweepTable(name=name)

    def test_panel(self, test_data_factory: TestDataFactory) -> None:
        panel = test_data_factory.create_panel()

        assert panel.fixed.omega == 3
        assert [curve.tau for curve in panel.curves] == [-2, 1]

    @pytest.mark.parametrize("overrides", [
        {"varying": "omega"},
        {"curves": []},
        {"figure": "fig 2"},
        {"fixed": {"omega": 3, "gamma": 1}},
    ])
    def test_panel_rejects(self, test_data_factory: TestDataFactory, overrides: Dict[str, Any]) -> None:
        with pytest.raises(ValidationError):
            FigurePanel(**test_data_factory.create_panel_data(**overrides))


class TestNumericsConfig:
    """Test class for the numerical defaults model."""

    def test_defaults(self) -> None:
        config = NumericsConfig()

        assert config.fd_step_ratio == 1e-5
        assert config.peak_scan_points == 64
        assert config.beta_range == (0.1, 30.0) and config.beta_steps == 300
        assert config.alpha_range == (0.5, 12.0) and config.alpha_steps == 200

    def test_fd_step_ratio_must_stay_below_tenth(self) -> None:
        with pytest.raises(ValidationError):
            NumericsConfig(fd_step_ratio=0.1)

    def test_unknown_setting_rejected(self) -> None:
        with pytest.raises(ValidationError):
            NumericsConfig(verbose=True)
