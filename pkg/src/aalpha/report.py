"""JSONL and CSV writers with fixed float formatting (byte-stable output)."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence

import numpy as np

JSON_DIGITS = 17
CSV_DIGITS = 6


def _float(x: float, digits: int) -> str:
    if math.isnan(x) or math.isinf(x):
        return "null"
    return format(x, f".{digits}g")


def dumps(obj: Any, digits: int = JSON_DIGITS) -> str:
    """Compact JSON with every float written to ``digits`` significant digits."""
    if isinstance(obj, (bool, np.bool_)) or obj is None:
        return json.dumps(bool(obj) if obj is not None else None)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _float(float(obj), digits)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v, digits)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v, digits) for v in obj) + "]"
    if hasattr(obj, "value"):
        return dumps(obj.value, digits)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def jsonl(records: Iterable[dict]) -> Iterable[str]:
    for rec in records:
        yield dumps(rec) + "\n"


def csv_cell(v: Any) -> str:
    if isinstance(v, (float, np.floating)):
        return _float(float(v), CSV_DIGITS)
    if isinstance(v, (dict, list, tuple, np.ndarray)):
        return dumps(v, CSV_DIGITS)
    return "" if v is None else str(v)


def csv_lines(records: Iterable[dict], columns: Sequence[str]) -> Iterable[str]:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    yield buf.getvalue()
    for rec in records:
        buf.seek(0)
        buf.truncate()
        writer.writerow([csv_cell(rec.get(c)) for c in columns])
        yield buf.getvalue()
