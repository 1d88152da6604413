# Path: src/core/project_config.py
"""solvops.toml job files.

    [job]
    command = "verify"          # eval | kernel | spectrum | verify | transmute | scan
    name = "bessel-0.7"

    [params]
    family = "bessel"
    m = "0.7,0"
    z = "-1,0"

    [grid]
    h = 0.01

    [output]
    path = "out/bessel.json"
    format = "json"

Relative output paths resolve against the directory holding the file.
"""
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from enum import Enum
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

__all__ = [
    "CONFIG_FILENAME",
    "Command",
    "OutputFormat",
    "JobMetadata",
    "GridOptions",
    "OutputOptions",
    "JobConfig",
    "load_job_config",
    "find_project_config",
]

CONFIG_FILENAME = "solvops.toml"

Scalar = Union[str, float, int]


class Command(str, Enum):
    EVAL = "eval"
    KERNEL = "kernel"
    SPECTRUM = "spectrum"
    VERIFY = "verify"
    TRANSMUTE = "transmute"
    SCAN = "scan"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class JobMetadata(BaseModel):
    command: Command
    name: str = Field(default="job", description="Label used in logs and default file names")


class GridOptions(BaseModel):
    a: Optional[float] = Field(default=None, description="Left window edge (default: decay based)")
    b: Optional[float] = Field(default=None, description="Right window edge")
    h: float = Field(default=0.01, gt=0, description="Grid spacing")
    points: list[float] = Field(default_factory=list, description="Sample points x")
    points_y: list[float] = Field(default_factory=list, description="Sample points y")
    count: int = Field(default=10, ge=0, description="Eigenvalue count / scan cells per axis")
    refine: bool = Field(default=False, description="verify: also measure the refinement order")
    double_window: bool = Field(
        default=False, description="verify: also measure the change on a doubled window"
    )


class OutputOptions(BaseModel):
    path: Optional[Path] = None
    format: OutputFormat = OutputFormat.CSV


class JobConfig(BaseModel):
    job: JobMetadata
    params: dict[str, Scalar] = Field(default_factory=dict)
    grid: GridOptions = Field(default_factory=GridOptions)
    output: OutputOptions = Field(default_factory=OutputOptions)

    # directory of the job file; relative output paths hang off it
    _config_path: Path = Path(".")

    @field_validator("params")
    @classmethod
    def lower_keys(cls, v: dict[str, Scalar]) -> dict[str, Scalar]:
        return {key.lower(): value for key, value in v.items()}

    def resolve_output(self) -> Optional[Path]:
        if self.output.path is None:
            return None
        return (self._config_path.parent / self.output.path).resolve()


def load_job_config(config_path: Path) -> JobConfig:
    """Read and validate a solvops.toml file."""
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found at: {config_path}")

    with open(config_path, "rb") as f:
        data = tomllib.load(f)

    try:
        config = JobConfig(**data)
        config._config_path = config_path
        return config
    except ValidationError as e:
        raise ValueError(f"Invalid job file {config_path}: {e}") from e


def find_project_config(start_path: Path = Path(".")) -> Optional[Path]:
    """Look for solvops.toml from ``start_path`` up to the filesystem root."""
    current = start_path.resolve()
    for _ in range(100):
        config_file = current / CONFIG_FILENAME
        if config_file.exists():
            return config_file

        parent = current.parent
        if parent == current:
            break
        current = parent
    return None
