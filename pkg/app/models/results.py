"""Result models for metrology, correlations and verification"""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class QfiValue(BaseModel):
    """Fisher information for estimating beta, in units of 1/beta^2"""
    value: float = Field(..., ge=0, allow_inf_nan=False)

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )


class PeakResult(BaseModel):
    """Location and height of the QFI maximum along beta"""
    beta_star: float = Field(..., gt=0)
    qfi_star: float = Field(..., ge=0)
    bracket: Tuple[float, float] = Field(..., description="Search interval (lo, hi)")
    evaluations: int = Field(..., ge=1, description="QFI evaluations spent")

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )


class LquValue(BaseModel):
    """Local quantum uncertainty and the two candidate maxima it is built from"""
    value: float = Field(..., ge=0, le=1)
    theta11: float
    theta33: float

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @model_validator(mode="after")
    def check_value(self) -> "LquValue":
        # equality holds for the X-family; a general Pi can only have a larger top eigenvalue
        bound = min(max(1.0 - max(self.theta11, self.theta33), 0.0), 1.0)
        if self.value > bound + 1e-12:
            raise ValueError("LQU cannot exceed 1 - max(theta11, theta33)")
        return self


class CheckResult(BaseModel):
    """Outcome of one verification check"""
    name: str = Field(..., min_length=1)
    passed: bool
    defect: float = Field(..., description="Measured worst-case deviation")
    tolerance: float = Field(..., description="Bound the defect is compared against")
    detail: Optional[str] = Field(None, description="Where the worst case occurred")

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    def report_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: defect={self.defect:.3e} tol={self.tolerance:.1e}"
        return f"{line} ({self.detail})" if self.detail else line
