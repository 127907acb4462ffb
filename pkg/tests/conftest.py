"""
Pytest configuration and shared fixtures for the detector-metrology tests.
"""

from pathlib import Path
from typing import Any, Dict, List

import pytest

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.models import DetectorParams
from app.repositories import CsvSweepRepository, InMemorySweepRepository
from app.services import SweepService
from tests.utils.test_data import TestDataFactory


@pytest.fixture(scope="session")
def test_data_factory() -> TestDataFactory:
    """
    Session-scoped test data factory for consistent test data generation.

    Returns:
        TestDataFactory: Factory for generating test data
    """
    return TestDataFactory()


@pytest.fixture
def numerics_config() -> NumericsConfig:
    return DEFAULT_CONFIG


@pytest.fixture
def small_grid_config() -> NumericsConfig:
    """
    Config with short default sweep grids, for figure-level tests.

    Returns:
        NumericsConfig: Defaults with 5-point beta and alpha grids
    """
    return NumericsConfig(beta_steps=5, alpha_steps=5)


@pytest.fixture
def sweep_service(numerics_config: NumericsConfig) -> SweepService:
    return SweepService(numerics_config)


@pytest.fixture
def clean_repository() -> InMemorySweepRepository:
    """
    Provides a clean, empty repository for each test.

    Returns:
        InMemorySweepRepository: Fresh repository instance
    """
    return InMemorySweepRepository()


@pytest.fixture
def populated_repository(
    clean_repository: InMemorySweepRepository,
    test_data_factory: TestDataFactory
) -> InMemorySweepRepository:
    """
    Provides a repository holding two small tables.

    Args:
        clean_repository: Fresh repository instance
        test_data_factory: Factory for generating test data

    Returns:
        InMemorySweepRepository: Repository with sample tables
    """
    clean_repository.write_table(test_data_factory.create_sweep_table("first"))
    clean_repository.write_table(test_data_factory.create_sweep_table("second", rows=2))
    return clean_repository


@pytest.fixture
def csv_repository(tmp_path: Path) -> CsvSweepRepository:
    return CsvSweepRepository(directory=tmp_path / "out")


@pytest.fixture
def sample_params(test_data_factory: TestDataFactory) -> DetectorParams:
    """The (omega=3, beta=10, alpha=-6, tau=1) reference point"""
    return test_data_factory.create_params()


@pytest.fixture
def invalid_param_samples() -> Dict[str, List[Any]]:
    """
    Provides invalid values per parameter for validation testing.

    Returns:
        Dict[str, List[Any]]: Field name to values outside its domain
    """
    return {
        "omega": [0.0, -1.0, float("nan"), float("inf")],
        "beta": [0.0, -0.5, float("inf")],
        "alpha": [0.0, 0.5, float("-inf")],
        "tau": [-3.5, 1.0000001, float("nan")],
    }


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers and settings."""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "slow: Slow running tests")


def pytest_collection_modifyitems(config, items):
    """Automatically mark tests based on their location."""
    for item in items:
        # Add unit marker to unit tests
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        # Add integration marker to integration tests
        elif "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
