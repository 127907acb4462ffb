"""
Unit tests for the figure catalogue loader.
"""

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from app.utils.data_loader import FigureCatalogueLoader
from tests.utils.test_data import TestDataFactory


def write_catalogue(path: Path, content) -> Path:
    path.write_text(json.dumps(content), encoding="utf-8")
    return path


class TestFigureCatalogueLoader:
    """Test class for FigureCatalogueLoader."""

    def test_default_catalogue(self) -> None:
        panels = FigureCatalogueLoader().load_panels()

        assert len(panels) == 17
        assert sum(len(panel.curves) for panel in panels) == 60
        assert {panel.varying for panel in panels} == {"beta", "alpha_abs"}

    def test_loads_valid_panels(self, tmp_path: Path, test_data_factory: TestDataFactory) -> None:
        path = write_catalogue(tmp_path / "figures.json", [test_data_factory.create_panel_data()])
        (panel,) = FigureCatalogueLoader(path).load_panels()

        assert panel.figure == "qfi_beta_tau"
        assert [curve.tau for curve in panel.curves] == [-2.0, 1.0]

    def test_skips_invalid_panels(self, tmp_path: Path, test_data_factory: TestDataFactory) -> None:
        content = [
            test_data_factory.create_panel_data(),
            test_data_factory.create_panel_data(varying="omega"),
            test_data_factory.create_panel_data(curves=[]),
            "not a panel",
        ]
        path = write_catalogue(tmp_path / "figures.json", content)

        with patch('app.utils.data_loader.logger') as mock_logger:
            panels = FigureCatalogueLoader(path).load_panels()

            assert len(panels) == 1
            assert mock_logger.warning.call_count == 3

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError):
            FigureCatalogueLoader(tmp_path / "absent.json").load_panels()

    def test_not_a_list(self, tmp_path: Path) -> None:
        path = write_catalogue(tmp_path / "figures.json", {"figure": "qfi_beta_tau"})
        with pytest.raises(ValueError, match="list of panels"):
            FigureCatalogueLoader(path).load_panels()

    def test_malformed_json(self, tmp_path: Path) -> None:
        path = tmp_path / "figures.json"
        path.write_text("[{", encoding="utf-8")
        with pytest.raises(json.JSONDecodeError):
            FigureCatalogueLoader(path).load_panels()
