"""Domain exceptions for the detector model, metrology and dynamics layers"""

from typing import Any, List, Optional, Tuple


class DetectorModelError(Exception):
    """Base class for every error raised by the detector toolkit"""


class OutOfDomain(DetectorModelError, ValueError):
    """
    Raised when one or more inputs fall outside their physical domain.

    Every violated bound is kept in ``violations`` as ``(field, value, allowed)``;
    ``field``, ``value`` and ``allowed`` refer to the first one.
    """

    def __init__(self, field: str, value: Any, allowed: str,
                 others: Optional[List[Tuple[str, Any, str]]] = None):
        self.field = field
        self.value = value
        self.allowed = allowed
        self.violations: List[Tuple[str, Any, str]] = [(field, value, allowed)] + list(others or [])
        details = "; ".join(f"{name}={val!r} not in {rng}" for name, val, rng in self.violations)
        super().__init__(f"Out of domain: {details}")


class Overflow(DetectorModelError, ArithmeticError):
    """Raised when a log-domain quantity exceeds the binary64 range"""


class Degenerate(DetectorModelError, ArithmeticError):
    """Raised when a spectral quantity is inconsistent beyond round-off"""


class StepTooLarge(DetectorModelError, ValueError):
    """Raised when a finite-difference step is too coarse for the point"""


class FlatLandscape(DetectorModelError, RuntimeError):
    """Raised when the coarse QFI scan peaks on a bracket end"""


class NotPositive(DetectorModelError, ValueError):
    """Raised when a matrix has an eigenvalue below the positivity floor"""


class NotAState(DetectorModelError, ValueError):
    """Raised when Bell-diagonal coefficients do not describe a density matrix"""


class StepUnstable(DetectorModelError, RuntimeError):
    """Raised when the integrator drifts off the unit-trace manifold"""
