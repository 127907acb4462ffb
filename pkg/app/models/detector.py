"""Parameter and coefficient models for two co-located detectors in an alpha-vacuum"""

import math
from typing import Any, Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from app.exceptions import OutOfDomain

# Allowed range per field, as reported in OutOfDomain diagnostics
PARAM_DOMAINS: Dict[str, str] = {
    "omega": "(0, inf)",
    "beta": "(0, inf)",
    "alpha": "(-inf, 0)",
    "tau": "[-3, 1]",
}


class DetectorParams(BaseModel):
    """The four physical knobs of the model, validated on construction"""
    omega: float = Field(..., gt=0, allow_inf_nan=False, description="Detector energy spacing")
    beta: float = Field(..., gt=0, allow_inf_nan=False, description="Inverse Gibbons-Hawking temperature")
    alpha: float = Field(..., lt=0, allow_inf_nan=False, description="CPT-invariant alpha-vacuum parameter")
    tau: float = Field(..., ge=-3, le=1, allow_inf_nan=False, description="Initial-state constant of motion")

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @property
    def alpha_abs(self) -> float:
        """|alpha| as reported in every output column"""
        return -self.alpha

    def with_beta(self, beta: float) -> "DetectorParams":
        """Copy of the point at another beta (used by finite differences)"""
        return validate(self.omega, beta, self.alpha, self.tau)


def validate(omega: float, beta: float, alpha: float, tau: float) -> DetectorParams:
    """
    Validate the four raw reals into DetectorParams.

    Args:
        omega: Energy spacing, must be positive
        beta: Inverse temperature, must be positive
        alpha: Vacuum parameter, must be negative (callers holding |alpha| negate first)
        tau: Initial-state constant, must lie in [-3, 1]

    Returns:
        DetectorParams with the values unchanged

    Raises:
        OutOfDomain: Listing every violated bound
    """
    raw = {"omega": omega, "beta": beta, "alpha": alpha, "tau": tau}
    try:
        return DetectorParams(**raw)
    except ValidationError as e:
        violations: List[Tuple[str, Any, str]] = []
        for error in e.errors():
            field = str(error["loc"][0]) if error["loc"] else "params"
            violations.append((field, raw.get(field), PARAM_DOMAINS.get(field, "valid input")))
        first, *others = violations
        raise OutOfDomain(*first, others=others) from e


class KossakowskiSpectrum(BaseModel):
    """Spectral density values and Kossakowski coefficients at one parameter point"""
    y_plus: float = Field(..., gt=0, description="Y(omega)")
    y_minus: float = Field(..., ge=0, description="Y(-omega)")
    sigma_plus: float = Field(..., gt=0, description="(Y(omega) + Y(-omega)) / 2")
    sigma_minus: float = Field(..., description="(Y(omega) - Y(-omega)) / 2")
    ratio: float = Field(..., ge=-1, le=1, description="T = sigma_minus / sigma_plus")
    ratio_gap: float = Field(..., ge=0, le=1, description="1 - T^2 evaluated without cancellation")

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @model_validator(mode="after")
    def check_consistency(self) -> "KossakowskiSpectrum":
        if not math.isclose(self.sigma_plus + self.sigma_minus, self.y_plus, rel_tol=1e-12, abs_tol=1e-12 * self.sigma_plus):
            raise ValueError("sigma_plus + sigma_minus must equal y_plus")
        if not math.isclose(self.sigma_plus - self.sigma_minus, self.y_minus, rel_tol=1e-12, abs_tol=1e-12 * self.sigma_plus):
            raise ValueError("sigma_plus - sigma_minus must equal y_minus")
        return self


class LindbladCoeffs(BaseModel):
    """Coefficients of the shared Kossakowski matrix and the detector gap"""
    kappa_plus: float = Field(..., gt=0)
    kappa_minus: float
    tau_k: float = Field(..., description="Y0(0) - kappa_plus, the dephasing entry of the Kossakowski matrix")
    omega: float = Field(..., gt=0)

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @model_validator(mode="after")
    def check_rates(self) -> "LindbladCoeffs":
        # equality is reached once T rounds to +-1
        if abs(self.kappa_minus) > self.kappa_plus:
            raise ValueError("|kappa_minus| must not exceed kappa_plus")
        return self

    @property
    def ratio(self) -> float:
        return self.kappa_minus / self.kappa_plus
