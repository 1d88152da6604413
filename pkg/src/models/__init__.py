# Path: src/models/__init__.py
from .number import CNumber, format_complex, parse_complex
from .report import (
    CheckSummary,
    GreenReport,
    GridInfo,
    ScanCell,
    SpectrumRow,
    TransmuteReport,
    ValueRow,
)

__all__ = [
    "CNumber",
    "format_complex",
    "parse_complex",
    "CheckSummary",
    "GreenReport",
    "GridInfo",
    "ScanCell",
    "SpectrumRow",
    "TransmuteReport",
    "ValueRow",
]
