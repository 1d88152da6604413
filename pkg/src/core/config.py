# Path: src/core/config.py
import os
from pathlib import Path

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    PROJECT_NAME: str = "solvops"

    # Paths
    BASE_DIR: Path = Path(__file__).resolve().parent.parent.parent
    DATA_DIR: Path = BASE_DIR / "data"
    LOG_DIR: Path = BASE_DIR / "logs"
    OUTPUT_DIR: Path = BASE_DIR / "output"
    ACCEPTANCE_FILE: Path = DATA_DIR / "acceptance.yaml"

    # Parallelism (scan cells, verification suites)
    SOLVOPS_THREADS: int = os.cpu_count() or 1

    # Series summation
    SERIES_TOL: float = 1e-16
    SERIES_MAX_TERMS: int = 10_000
    SERIES_CONSECUTIVE_SMALL: int = 3

    # Spectra
    MAX_EIGENVALUES: int = 64

    # Grid oracle
    CONDITION_LIMIT: float = 1e12
    SPURIOUS_NUDGE: float = 1e-6

    # Quadrature
    QUAD_TOL: float = 1e-10
    QUAD_MAX_INTERVALS: int = 2000

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True
    )

    @field_validator("SOLVOPS_THREADS")
    @classmethod
    def at_least_one_thread(cls, v: int) -> int:
        return max(1, v)


settings = Settings()
