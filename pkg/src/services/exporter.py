# Path: src/services/exporter.py
"""CSV / JSON rendering of service results.

CSV: RFC-4180 quoting, LF line endings, floats with 17 significant digits,
empty cells for missing values. JSON: UTF-8, sorted keys, the pydantic
models dumped in json mode.
"""
import csv
import io
import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from pydantic import BaseModel

from src.core.project_config import OutputFormat

__all__ = ["format_float", "to_csv", "to_json", "render", "write_output"]

logger = logging.getLogger(__name__)

Payload = Union[BaseModel, Sequence[BaseModel]]


def format_float(v: float) -> str:
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.17g}"


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    if isinstance(v, BaseModel):
        return json.dumps(v.model_dump(mode="json"), sort_keys=True)
    if isinstance(v, Enum):
        return str(v.value)
    return str(v)


def to_csv(rows: Sequence[BaseModel]) -> str:
    """Header from the first row's fields, one line per row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if not rows:
        return ""
    columns = list(type(rows[0]).model_fields)
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(getattr(row, name)) for name in columns])
    return buf.getvalue()


def to_json(payload: Payload) -> str:
    if isinstance(payload, BaseModel):
        data: Any = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render(payload: Payload, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return to_json(payload)
    rows = [payload] if isinstance(payload, BaseModel) else list(payload)
    return to_csv(rows)


def write_output(payload: Payload, fmt: OutputFormat, path: Optional[Path]) -> str:
    """Render ``payload``; also write it to ``path`` when one is given."""
    text = render(payload, fmt)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        # newline="" keeps LF endings on every platform
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"Wrote {fmt.value.upper()} to {path}")
    return text
