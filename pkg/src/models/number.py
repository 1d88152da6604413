# Path: src/models/number.py
import math
from typing import Union

from pydantic import BaseModel, Field, field_validator

from src.core.errors import ParameterError

__all__ = ["CNumber", "parse_complex", "format_complex"]

_INF_WORDS = {"inf", "infinity", "∞"}


class CNumber(BaseModel):
    """A complex number as it appears in reports: {"re": ..., "im": ...}."""

    re: float = Field(..., description="Real part")
    im: float = Field(default=0.0, description="Imaginary part")

    @classmethod
    def of(cls, z: complex) -> "CNumber":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    @field_validator("re", "im")
    @classmethod
    def not_nan(cls, v: float) -> float:
        if math.isnan(v):
            raise ValueError("NaN is not a valid component")
        return v


def parse_complex(text: Union[str, float, int, complex]) -> complex:
    """'re,im' or a bare real; 'inf' stands for the point at infinity."""
    if isinstance(text, (int, float, complex)):
        return complex(text)
    raw = text.strip().replace(" ", "")
    if raw.lower() in _INF_WORDS:
        return complex(math.inf, 0.0)
    parts = raw.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ParameterError(f"expected a complex number as 're,im', got {text!r}")


def format_complex(z: complex) -> str:
    if math.isinf(z.real) or math.isinf(z.imag):
        return "inf"
    return f"{z.real:.17g},{z.imag:.17g}"
