"""CSV and JSON emission with stable float formatting."""
from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path


def fmt(x) -> str:
    """Floats with 17 significant digits; everything else via str."""
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return str(x)
        return format(x, ".17g")
    if hasattr(x, "dtype") and getattr(x.dtype, "kind", "") == "f":
        return fmt(float(x))
    return str(x)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])
    return buf.getvalue()


def table_csv(records: list[dict]) -> str:
    if not records:
        return ""
    header = list(records[0])
    return csv_text(header, [[r[h] for h in header] for r in records])


def emit(text: str, out=None) -> None:
    """Write to ``out`` when given, else print."""
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
    else:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)


def dumps(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"
