from .sweep_repository import SweepRepository, InMemorySweepRepository, CsvSweepRepository, write_csv

__all__ = ["SweepRepository", "InMemorySweepRepository", "CsvSweepRepository", "write_csv"]
