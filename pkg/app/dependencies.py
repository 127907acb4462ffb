"""Command dependencies using dependency injection pattern"""

import sys
from pathlib import Path
from typing import Optional

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.repositories import CsvSweepRepository, SweepRepository
from app.services import SweepService, VerificationService
from app.utils.data_loader import DEFAULT_CATALOGUE, FigureCatalogueLoader


def get_config() -> NumericsConfig:
    """Numerical defaults shared by every command"""
    return DEFAULT_CONFIG


def get_sweep_service(config: Optional[NumericsConfig] = None) -> SweepService:
    return SweepService(config or get_config())


def get_sweep_repository(out_dir: Optional[Path] = None) -> SweepRepository:
    """
    Repository the commands write tables to.

    Args:
        out_dir: Directory for one CSV per table; standard output when omitted

    Returns:
        SweepRepository: The repository instance
    """
    if out_dir is None:
        return CsvSweepRepository(stream=sys.stdout)
    return CsvSweepRepository(directory=out_dir)


def get_verification_service(tolerance_scale: float = 1.0,
                             config: Optional[NumericsConfig] = None) -> VerificationService:
    return VerificationService(config=config or get_config(), tolerance_scale=tolerance_scale)


def get_figure_loader(catalogue: Path = DEFAULT_CATALOGUE) -> FigureCatalogueLoader:
    return FigureCatalogueLoader(catalogue)
