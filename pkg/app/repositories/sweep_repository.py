"""Sweep table repository interfaces and implementations"""

import csv
import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, List, Optional, TextIO

from app.models import SWEEP_COLUMNS, SweepTable
from app.utils.common_utils import format_float

logger = logging.getLogger(__name__)


class SweepRepository(ABC):
    """Abstract repository interface for emitted sweep tables"""

    @abstractmethod
    def write_table(self, table: SweepTable) -> str:
        """Store a table, returning where it went"""
        pass

    @abstractmethod
    def list_tables(self) -> List[str]:
        """Names of the tables stored so far, in write order"""
        pass


class InMemorySweepRepository(SweepRepository):
    """In-memory implementation keeping the tables themselves"""

    def __init__(self):
        self._tables: Dict[str, SweepTable] = {}

    def write_table(self, table: SweepTable) -> str:
        self._tables[table.name] = table
        return table.name

    def list_tables(self) -> List[str]:
        return list(self._tables)

    def get_table(self, name: str) -> Optional[SweepTable]:
        return self._tables.get(name)


def write_csv(table: SweepTable, stream: TextIO) -> None:
    """Header plus one row per point, LF line endings, 17 significant digits"""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in table.rows:
        writer.writerow([format_float(value) for value in row.values()])


class CsvSweepRepository(SweepRepository):
    """
    CSV implementation writing either one file per table into a directory
    or every table to a single text stream (used for standard output).
    """

    def __init__(self, directory: Optional[Path] = None, stream: Optional[TextIO] = None):
        if (directory is None) == (stream is None):
            raise ValueError("Exactly one of directory or stream is required")
        self.directory = Path(directory) if directory is not None else None
        self.stream = stream
        self._written: List[str] = []

    def path_for(self, name: str) -> Path:
        file_name = name if name.endswith(".csv") else f"{name}.csv"
        return self.directory / file_name

    def write_table(self, table: SweepTable) -> str:
        """
        Write one table.

        Args:
            table: Rows to emit

        Returns:
            File path written, or "-" for the stream

        Raises:
            OSError: If the directory cannot be created or the file written
        """
        if self.stream is not None:
            write_csv(table, self.stream)
            location = "-"
        else:
            self.directory.mkdir(parents=True, exist_ok=True)
            path = self.path_for(table.name)
            with open(path, "w", encoding="utf-8", newline="") as file:
                write_csv(table, file)
            location = str(path)
            logger.debug(f"Wrote {len(table.rows)} rows to {path}")

        self._written.append(table.name)
        return location

    def list_tables(self) -> List[str]:
        return list(self._written)
