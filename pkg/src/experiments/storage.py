"""CSV and JSON output helpers."""

import json
import math
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from loguru import logger
from pydantic import BaseModel

CSV_FLOAT_FORMAT = "%.17g"


def json_default(obj: Any) -> Any:
    """JSON serializer for numpy, path, enum and pydantic values."""
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return finite_or_label(float(obj))
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, BaseModel):
        return obj.model_dump(mode="json")
    raise TypeError(f"Object of type {type(obj)} is not JSON serializable")


def finite_or_label(value: float) -> float | str:
    """Infinite and NaN floats become the strings inf, -inf and nan."""
    if math.isfinite(value):
        return value
    return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")


def write_json(payload: dict[str, Any], path: Path) -> Path:
    """Write an indented, key-sorted JSON document."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, default=json_default, indent=2, sort_keys=True) + "\n")
    logger.info(f"Wrote {path}")
    return path


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    """Write a CSV with full float precision and no index."""
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    logger.info(f"Wrote {path} ({len(frame)} rows)")
    return path
