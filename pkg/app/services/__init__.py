"""Services package for the physics layers and the command-level services"""

from .sweep_service import SweepService
from .verification_service import VerificationService

__all__ = ["SweepService", "VerificationService"]
