"""Deterministic table output: CSV and JSON with byte-stable formatting.

All numbers are rendered with 12 significant digits, '.' decimal separator,
and '\n' row terminators, header row first. Negative zero is normalized so
identical computations emit identical bytes across platforms.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

__all__ = ["format_number", "render_table", "write_table"]


def format_number(value) -> str:
    """12-significant-digit rendering with -0 folded to 0."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    v = float(value)
    if v == 0.0:
        v = 0.0  # drops the sign of -0.0
    return f"{v:.12g}"


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    return format_number(value)


def render_table(columns: Sequence[str], rows: Iterable[Sequence],
                 fmt: str = "csv") -> str:
    """Render rows under a header as csv or a json mirror of the same fields."""
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_cell(v) for v in row))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        body = {"columns": list(columns),
                "rows": [[_cell(v) for v in row] for row in rows]}
        return json.dumps(body, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def write_table(path, columns: Sequence[str], rows: Iterable[Sequence],
                fmt: str = "csv") -> None:
    text = render_table(columns, rows, fmt)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
