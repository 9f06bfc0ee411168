"""CSV and JSON serialization of reports and tables, with schema validation."""

from __future__ import annotations

import csv
import io
import json
import math
from importlib import resources
from typing import Iterable, Optional, Sequence, TextIO

import jsonschema

from .bounds import VERDICTS, config_hash

__all__ = [
    "SCHEMA_VERSION",
    "REPORT_COLUMNS",
    "load_schema",
    "validate",
    "format_value",
    "write_csv",
    "csv_text",
    "report_rows",
    "campaign_document",
    "table_document",
    "dump_json",
]

SCHEMA_VERSION = 1
REPORT_COLUMNS = ("spec_id", "alpha", "y", "threshold", "p_hat", "ci_low", "ci_high", "bound", "verdict")


def load_schema(name: str) -> dict:
    """``name`` is ``"report"`` or ``"table"``."""
    text = resources.files("stable_tails.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(document: dict, name: str) -> None:
    """Raise ``jsonschema.ValidationError`` if ``document`` violates the named schema."""
    jsonschema.validate(document, load_schema(name))


def format_value(v) -> str:
    """Text form for CSV cells: floats at 17 significant digits, NaN/None empty."""
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "" if math.isnan(v) else f"{v:.17g}"
    return str(v)


def write_csv(stream: TextIO, columns: Sequence[str], rows: Iterable[Sequence]) -> None:
    """RFC 4180: CRLF line ends, minimal quoting with doubled quotes."""
    w = csv.writer(stream, lineterminator="\r\n", quoting=csv.QUOTE_MINIMAL)
    w.writerow(columns)
    for row in rows:
        w.writerow([format_value(v) for v in row])


def csv_text(columns, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, columns, rows)
    return buf.getvalue()


def report_rows(reports) -> list[list]:
    """One row per grid point, in :data:`REPORT_COLUMNS` order."""
    rows = []
    for r in reports:
        for p in r.results:
            e = p.estimate
            rows.append([r.spec_id, p.alpha, p.y, p.threshold,
                         e.p_hat if e else math.nan, e.ci_low if e else math.nan, e.ci_high if e else math.nan,
                         p.bound_value, p.verdict])
    return rows


def _clean(obj):
    # JSON has no NaN/inf
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return _clean(obj.item())
    return obj


def campaign_document(name: str, reports, config: Optional[dict] = None) -> dict:
    counts = {v: 0 for v in VERDICTS}
    for r in reports:
        for k, v in r.counts().items():
            counts[k] += v
    cfg = dict(config or {}, campaign=name, reports=[r.config_hash for r in reports])
    return _clean({"schema_version": SCHEMA_VERSION, "kind": "verification", "campaign": name,
                   "config_hash": config_hash(cfg), "counts": counts, "reports": [r.as_dict() for r in reports]})


def table_document(kind: str, config: dict, columns, rows, warnings=()) -> dict:
    return _clean({"schema_version": SCHEMA_VERSION, "kind": kind, "config_hash": config_hash(config),
                   "config": config, "columns": list(columns), "rows": [list(r) for r in rows],
                   "warnings": list(warnings)})


def dump_json(document: dict, stream: TextIO) -> None:
    json.dump(document, stream, indent=1, allow_nan=False)
    stream.write("\n")
