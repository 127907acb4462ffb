"""Two-detector state models: dense density matrices, the X-family and trajectories"""

from typing import Any, List, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from app.config import DEFAULT_CONFIG
from app.utils.pauli import EIGENBASIS, bloch_matrix


class DensityMatrix4(BaseModel):
    """
    A validated 4x4 density matrix in the ordered basis {|00>, |01>, |10>, |11>}.

    The PSD floor defaults to ``DEFAULT_CONFIG.psd_tol`` and may be relaxed
    through the validation context key ``psd_tol`` (used for integrator samples).
    """
    entries: np.ndarray

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
        extra="forbid"
    )

    @field_validator("entries", mode="before")
    @classmethod
    def coerce_entries(cls, value: Any) -> np.ndarray:
        matrix = np.array(value, dtype=complex)
        if matrix.shape != (4, 4):
            raise ValueError(f"Density matrix must be 4x4, got shape {matrix.shape}")
        matrix.setflags(write=False)
        return matrix

    @model_validator(mode="after")
    def check_state(self, info: ValidationInfo) -> "DensityMatrix4":
        context = info.context or {}
        psd_tol = context.get("psd_tol", DEFAULT_CONFIG.psd_tol)
        matrix = self.entries
        if np.max(np.abs(matrix - matrix.conj().T)) > DEFAULT_CONFIG.hermitian_tol:
            raise ValueError("Density matrix is not Hermitian")
        trace = np.trace(matrix)
        if abs(trace - 1.0) > DEFAULT_CONFIG.trace_tol:
            raise ValueError(f"Density matrix trace {trace.real:.17g} differs from 1")
        min_eigenvalue = float(np.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T)).min())
        if min_eigenvalue < -psd_tol:
            raise ValueError(f"Density matrix has eigenvalue {min_eigenvalue:.3e} below -{psd_tol:g}")
        return self

    @classmethod
    def from_array(cls, matrix: Any, psd_tol: float = DEFAULT_CONFIG.psd_tol) -> "DensityMatrix4":
        """Validate a raw array with an explicit positivity floor"""
        return cls.model_validate({"entries": matrix}, context={"psd_tol": psd_tol})

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.entries)


class XState(BaseModel):
    """The four independent entries of the equilibrium X-matrix"""
    eta_minus: float = Field(..., description="<00|rho|00>")
    eta_plus: float = Field(..., description="<11|rho|11>")
    eta_22: float = Field(..., description="<01|rho|01> = <10|rho|10>")
    eta_23: float = Field(..., description="<01|rho|10>")

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @model_validator(mode="after")
    def check_invariants(self) -> "XState":
        total = self.eta_minus + self.eta_plus + 2.0 * self.eta_22
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"X-state trace {total:.17g} differs from 1")
        if self.eta_minus < -1e-12 or self.eta_plus < -1e-12:
            raise ValueError("X-state populations must be non-negative")
        if self.eta_22 < abs(self.eta_23) - 1e-12:
            raise ValueError("X-state inner block is not positive semidefinite")
        return self

    def to_array(self) -> np.ndarray:
        return np.array([
            [self.eta_minus, 0.0, 0.0, 0.0],
            [0.0, self.eta_22, self.eta_23, 0.0],
            [0.0, self.eta_23, self.eta_22, 0.0],
            [0.0, 0.0, 0.0, self.eta_plus],
        ], dtype=complex)

    def to_density_matrix(self) -> DensityMatrix4:
        return DensityMatrix4(entries=self.to_array())


class SpectralDecomp(BaseModel):
    """Eigenvalues of the X-state, paired with the fixed eigenbasis columns"""
    mu: Tuple[float, float, float, float]

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @model_validator(mode="after")
    def check_spectrum(self) -> "SpectralDecomp":
        if abs(sum(self.mu) - 1.0) > 1e-12:
            raise ValueError(f"Eigenvalues sum to {sum(self.mu):.17g}, not 1")
        if min(self.mu) < -1e-12:
            raise ValueError("Eigenvalues must be non-negative")
        return self

    @property
    def eigvecs(self) -> np.ndarray:
        """|00>, |11>, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2 as columns"""
        return EIGENBASIS

    def reconstruct(self) -> np.ndarray:
        return EIGENBASIS @ np.diag(np.asarray(self.mu, dtype=complex)) @ EIGENBASIS.conj().T


class Trajectory(BaseModel):
    """Sampled solution of the master equation"""
    times: List[float] = Field(..., min_length=1)
    states: List[DensityMatrix4] = Field(..., min_length=1)
    distances: List[float] = Field(..., description="Trace distance to the analytic equilibrium per sample")
    taus: List[float] = Field(..., description="sum_i <s_i (x) s_i> per sample")
    converged: bool
    final_distance: float = Field(..., ge=0)

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
        extra="forbid"
    )

    @model_validator(mode="after")
    def check_samples(self) -> "Trajectory":
        if not (len(self.times) == len(self.states) == len(self.distances) == len(self.taus)):
            raise ValueError("Trajectory sample lists must have equal length")
        if self.times[0] <= 0 or any(later <= earlier for earlier, later in zip(self.times, self.times[1:])):
            raise ValueError("Trajectory times must be positive and strictly increasing")
        return self


def as_array(rho: Union[DensityMatrix4, np.ndarray]) -> np.ndarray:
    """Raw complex matrix behind a DensityMatrix4 or an array-like"""
    if isinstance(rho, DensityMatrix4):
        return rho.entries
    return np.asarray(rho, dtype=complex)


def bloch_to_matrix(rho3: float, rho_diag: Sequence[float]) -> DensityMatrix4:
    """
    Validated state 1/4 [I + rho3 Gamma_3 + sum_i rho_ii s_i (x) s_i].

    Raises:
        ValidationError: If the coefficients do not describe a state
    """
    return DensityMatrix4(entries=bloch_matrix(rho3, rho_diag))
