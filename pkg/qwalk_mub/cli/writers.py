# qwalk_mub/cli/writers.py

"""
Table writers for csv, json and dat output.

Every file carries the resolved RunConfig: json under "config", csv and dat
as leading '#' comment lines. Output is deterministic for a given RunConfig.
"""

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

import numpy as np

from .config import RunConfig

logger = logging.getLogger(__name__)

Row = Mapping[str, Any]


def _columns(rows: Sequence[Row]) -> List[str]:
    """Union of row keys in first-seen order."""
    columns: Dict[str, None] = {}
    for row in rows:
        for key in row:
            columns.setdefault(key, None)
    return list(columns)


def _json_value(value: Any) -> Any:
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def _dat_value(value: Any) -> Optional[str]:
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return None


def _header_lines(config: RunConfig, summary: Mapping[str, Any]) -> List[str]:
    return [
        f"# config: {json.dumps(config.to_dict(), sort_keys=True)}",
        f"# summary: {json.dumps({k: _json_value(v) for k, v in summary.items()}, sort_keys=True)}",
    ]


def render_json(config: RunConfig, rows: Sequence[Row], summary: Mapping[str, Any]) -> str:
    document = {
        "config": config.to_dict(),
        "rows": [{key: _json_value(value) for key, value in row.items()} for row in rows],
        "summary": {key: _json_value(value) for key, value in summary.items()},
    }
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def render_csv(config: RunConfig, rows: Sequence[Row], summary: Mapping[str, Any]) -> str:
    buffer = io.StringIO()
    for line in _header_lines(config, summary):
        buffer.write(line + "\n")
    columns = _columns(rows)
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    if columns:
        writer.writeheader()
        writer.writerows(rows)
    return buffer.getvalue()


def render_dat(config: RunConfig, rows: Sequence[Row], summary: Mapping[str, Any]) -> str:
    """Whitespace-separated numeric columns; non-numeric columns are left out."""
    columns = [
        column for column in _columns(rows)
        if all(_dat_value(row.get(column)) is not None for row in rows)
    ]
    lines = _header_lines(config, summary)
    lines.append("# " + " ".join(columns))
    for row in rows:
        lines.append(" ".join(_dat_value(row[column]) for column in columns))
    return "\n".join(lines) + "\n"


_RENDERERS = {"json": render_json, "csv": render_csv, "dat": render_dat}


def write_table(output_dir: Path, name: str, config: RunConfig, rows: Sequence[Row],
                summary: Optional[Mapping[str, Any]] = None) -> Path:
    """
    Writes rows (and a summary) to output_dir/name.<fmt>.

    Raises:
        OSError: If the directory or file cannot be written.
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / f"{name}.{config.fmt}"
    text = _RENDERERS[config.fmt](config, rows, summary or {})
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(rows)} rows to {path}")
    return path
