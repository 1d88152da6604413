# Path: src/models/report.py
"""Rows and reports written by the CLI (CSV rows, JSON documents)."""
from typing import Optional

from pydantic import BaseModel, Field

from src.models.number import CNumber

__all__ = [
    "ValueRow",
    "SpectrumRow",
    "GridInfo",
    "GreenReport",
    "TransmuteReport",
    "ScanCell",
    "CheckSummary",
]


class ValueRow(BaseModel):
    """One sampled value; the fixed CSV layout x, y, re, im, err_est, path."""

    x: float
    y: Optional[float] = Field(default=None, description="Empty for one-variable functions")
    re: float
    im: float
    err_est: float = 0.0
    path: str = ""


class SpectrumRow(BaseModel):
    n: int
    re: float
    im: float


class GridInfo(BaseModel):
    a: float
    b: float
    h: float
    n: int
    clustering: str


class GreenReport(BaseModel):
    """One oracle check. A point that raised carries ``error`` and no metrics."""

    family: str
    params: dict[str, CNumber]
    z: CNumber
    z_used: Optional[CNumber] = None
    grid: Optional[GridInfo] = None
    rel_l2_error: Optional[float] = Field(default=None, ge=0)
    jump_error: Optional[float] = Field(default=None, ge=0)
    wronskian_spread: Optional[float] = Field(default=None, ge=0)
    condition: Optional[float] = Field(default=None, ge=0)
    refinement_order: Optional[float] = Field(
        default=None, description="Mean log2 error ratio over h, h/2, h/4"
    )
    window_change: Optional[float] = Field(
        default=None, ge=0, description="Relative change of rel_l2_error on a doubled window"
    )
    nudged: bool = False
    passed: bool = True
    failures: list[str] = Field(default_factory=list)
    error: Optional[str] = None


class TransmuteReport(BaseModel):
    pair: str
    z: Optional[CNumber] = None
    x: float
    y: float
    lhs: Optional[CNumber] = None
    rhs: Optional[CNumber] = None
    mismatch: Optional[float] = Field(default=None, ge=0)
    tolerance: float
    passed: bool
    error: Optional[str] = None


class ScanCell(BaseModel):
    index: int
    re: float
    im: float
    admissible: bool
    point_count: Optional[int] = None
    truncated: bool = False
    log_abs_kernel: Optional[float] = None
    note: str = ""


class CheckSummary(BaseModel):
    suite: str
    total: int
    passed: int
    reports: list[GreenReport] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total
