from .detector import DetectorParams, KossakowskiSpectrum, LindbladCoeffs, validate
from .states import DensityMatrix4, XState, SpectralDecomp, Trajectory, as_array, bloch_to_matrix
from .results import QfiValue, PeakResult, LquValue, CheckResult
from .sweep import SweepSpec, SweepRow, SweepTable, FigureCurve, FigurePanel, SWEEP_COLUMNS

__all__ = [
    "DetectorParams",
    "KossakowskiSpectrum",
    "LindbladCoeffs",
    "validate",
    "DensityMatrix4",
    "XState",
    "SpectralDecomp",
    "Trajectory",
    "as_array",
    "bloch_to_matrix",
    "QfiValue",
    "PeakResult",
    "LquValue",
    "CheckResult",
    "SweepSpec",
    "SweepRow",
    "SweepTable",
    "FigureCurve",
    "FigurePanel",
    "SWEEP_COLUMNS"
]
