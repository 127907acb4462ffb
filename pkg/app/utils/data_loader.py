"""Data loading utilities for the figure grid catalogue"""

import json
import logging
from pathlib import Path
from typing import List, Dict, Any, Iterator

from pydantic import ValidationError

from app.models import FigurePanel

logger = logging.getLogger(__name__)

DEFAULT_CATALOGUE = Path(__file__).resolve().parents[2] / "data" / "figures.json"


class FigureCatalogueLoader:

    def __init__(self, json_file_path: Path = DEFAULT_CATALOGUE):
        self.json_file_path = Path(json_file_path)

    def load_panels(self) -> List[FigurePanel]:
        """
        Load and validate figure panels from the JSON catalogue.

        Returns:
            Validated FigurePanel objects in file order

        Raises:
            FileNotFoundError: If the catalogue doesn't exist
            json.JSONDecodeError: If the JSON is malformed
            ValueError: If the JSON structure is invalid
        """
        raw_data = self._load_json_file()
        panels = list(self._validate_panels(raw_data))

        logger.info(f"Loaded {len(panels)} figure panels from {self.json_file_path}")
        return panels

    def _load_json_file(self) -> List[Dict[str, Any]]:
        """Load and parse JSON file"""
        if not self.json_file_path.exists():
            logger.error(f"Figure catalogue not found: {self.json_file_path}")
            raise FileNotFoundError(f"Figure catalogue not found: {self.json_file_path}")

        try:
            with open(self.json_file_path, 'r', encoding='utf-8') as file:
                data = json.load(file)
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in {self.json_file_path}: {e}")
            raise

        if not isinstance(data, list):
            raise ValueError("Figure catalogue should contain a list of panels")

        return data

    def _validate_panels(self, raw_data: List[Dict[str, Any]]) -> Iterator[FigurePanel]:
        """Validate raw entries, skipping the ones that are not panels"""
        for idx, panel_data in enumerate(raw_data, 1):
            try:
                yield FigurePanel(**panel_data)
            except (ValidationError, TypeError) as e:
                logger.warning(f"Skipping invalid figure panel at index {idx}: {e}")
                continue
