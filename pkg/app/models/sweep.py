"""Sweep and figure-catalogue models for the command line"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Column order of every emitted CSV
SWEEP_COLUMNS = (
    "omega", "beta", "alpha_abs", "tau", "t_ratio",
    "qfi", "lqu", "theta11", "theta33", "kms_defect",
)

SweepParameter = Literal["beta", "alpha_abs", "omega", "tau"]


class SweepSpec(BaseModel):
    """One-dimensional sweep over a single parameter with the other three fixed"""
    varying: SweepParameter
    start: float = Field(..., alias="from", allow_inf_nan=False)
    stop: float = Field(..., alias="to", allow_inf_nan=False)
    steps: int = Field(..., ge=2)
    scale: Literal["linear", "log"] = "linear"
    omega: Optional[float] = None
    beta: Optional[float] = None
    alpha_abs: Optional[float] = None
    tau: Optional[float] = None

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        populate_by_name=True
    )

    @model_validator(mode="after")
    def check_grid(self) -> "SweepSpec":
        if self.start >= self.stop:
            raise ValueError("Sweep requires from < to")
        if self.scale == "log" and self.start <= 0:
            raise ValueError("Log-scaled sweep requires from > 0")
        missing = [name for name in ("omega", "beta", "alpha_abs", "tau")
                   if name != self.varying and getattr(self, name) is None]
        if missing:
            raise ValueError(f"Missing fixed parameters: {', '.join(missing)}")
        return self

    def fixed(self) -> Dict[str, float]:
        """The three fixed parameters keyed by column name"""
        return {
            name: getattr(self, name)
            for name in ("omega", "beta", "alpha_abs", "tau")
            if name != self.varying
        }


class SweepRow(BaseModel):
    """One CSV row: a parameter point and everything evaluated there"""
    omega: float
    beta: float
    alpha_abs: float
    tau: float
    t_ratio: float = Field(..., ge=-1, le=1)
    qfi: float = Field(..., ge=0)
    lqu: float = Field(..., ge=0, le=1)
    theta11: float
    theta33: float
    kms_defect: float = Field(..., ge=0)

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    def values(self) -> List[float]:
        return [getattr(self, column) for column in SWEEP_COLUMNS]


class SweepTable(BaseModel):
    """Ordered rows of one sweep, named by the file stem they are written under"""
    name: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_.\-]+$")
    spec: Optional[SweepSpec] = Field(None, description="Absent for single-point tables")
    rows: List[SweepRow] = Field(default_factory=list)

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )


class FigureCurve(BaseModel):
    """Per-curve overrides of a panel's fixed parameters"""
    omega: Optional[float] = None
    beta: Optional[float] = None
    alpha_abs: Optional[float] = None
    tau: Optional[float] = None

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )


class FigurePanel(BaseModel):
    """A figure panel: one varying parameter, shared fixed values, several curves"""
    figure: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_]+$")
    panel: str = Field(..., min_length=1, pattern=r"^[A-Za-z0-9_]+$")
    varying: SweepParameter
    fixed: FigureCurve
    curves: List[FigureCurve] = Field(..., min_length=1)

    model_config = ConfigDict(
        frozen=True,
        extra="forbid"
    )

    @field_validator("varying")
    @classmethod
    def check_varying(cls, value: str) -> str:
        if value not in ("beta", "alpha_abs"):
            raise ValueError("Figure panels sweep beta or alpha_abs")
        return value
