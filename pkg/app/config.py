"""Numerical defaults shared by the services and the command line"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field


class NumericsConfig(BaseModel):
    """Tolerances, step sizes and default grids used across the toolkit"""

    # validation tolerances for 4x4 density matrices
    hermitian_tol: float = Field(1e-12, gt=0, description="Entrywise Hermiticity tolerance")
    trace_tol: float = Field(1e-12, gt=0, description="Unit-trace tolerance")
    psd_tol: float = Field(1e-10, gt=0, description="Most negative eigenvalue accepted")
    sqrt_floor: float = Field(1e-14, ge=0, description="Eigenvalues below this are treated as exact zeros under a square root")

    # metrology
    fd_step_ratio: float = Field(1e-5, gt=0, lt=0.1, description="Default central-difference step as a fraction of beta")
    peak_scan_points: int = Field(64, ge=3, description="Log-spaced points in the coarse QFI scan")
    peak_tol: float = Field(1e-6, gt=0, description="Golden-section tolerance on beta")
    dense_qfi_floor: float = Field(1e-12, ge=0, description="Pairs with lambda_i + lambda_j below this are dropped from the dense QFI")

    # lindblad oracle
    lindblad_step_factor: float = Field(0.01, gt=0, description="dt = factor / kappa_plus")
    lindblad_horizon_factor: float = Field(50.0, gt=0, description="t_end = factor / kappa_plus")
    lindblad_samples: int = Field(100, ge=1, description="Stored samples per trajectory")
    trace_drift_tol: float = Field(1e-6, gt=0, description="Trace deviation that aborts integration")
    convergence_tol: float = Field(1e-6, gt=0, description="Trace distance regarded as converged")

    # default sweep grids
    beta_range: Tuple[float, float] = (0.1, 30.0)
    beta_steps: int = 300
    alpha_range: Tuple[float, float] = (0.5, 12.0)
    alpha_steps: int = 200

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )


DEFAULT_CONFIG = NumericsConfig()
