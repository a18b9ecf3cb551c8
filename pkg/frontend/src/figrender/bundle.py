"""Loading and validating a figure data bundle.

A bundle is a directory holding three CSV files written by the computing
package's figure command:

    points.csv   n, i, <axis>, W        one row per truncation solution
    curves.csv   <axis>, W_0, ...       one row per grid abscissa
    guide.csv    <axis>, W              guide locus; may be header-only

All parsing errors carry the file name and 1-based line number.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

__all__ = ["BundleError", "FigureBundle", "load_bundle"]


class BundleError(Exception):
    """A bundle file is missing, ill-formed, or inconsistent."""


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class FigureBundle:
    points: Table
    curves: Table
    guide: Table

    @property
    def axis(self) -> str:
        return self.curves.columns[0]


def _read_table(path: Path) -> Table:
    if not path.is_file():
        raise BundleError(f"{path}: missing bundle file")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise BundleError(f"{path}:1: empty file, expected a header row")
        if any(not name.strip() for name in header):
            raise BundleError(f"{path}:1: blank column name in header")
        rows = []
        for lineno, raw in enumerate(reader, start=2):
            if len(raw) != len(header):
                raise BundleError(
                    f"{path}:{lineno}: expected {len(header)} fields, "
                    f"got {len(raw)}")
            try:
                rows.append(tuple(float(v) for v in raw))
            except ValueError:
                raise BundleError(f"{path}:{lineno}: non-numeric field")
    return Table(columns=tuple(header), rows=tuple(rows))


def load_bundle(bundle_dir) -> FigureBundle:
    """Read and cross-validate points.csv, curves.csv, guide.csv."""
    base = Path(bundle_dir)
    if not base.is_dir():
        raise BundleError(f"{base}: not a directory")
    points = _read_table(base / "points.csv")
    curves = _read_table(base / "curves.csv")
    guide = _read_table(base / "guide.csv")

    if len(points.columns) != 4 or points.columns[:2] != ("n", "i") \
            or points.columns[3] != "W":
        raise BundleError(
            f"{base / 'points.csv'}:1: header must be n,i,<axis>,W")
    if len(curves.columns) < 2:
        raise BundleError(
            f"{base / 'curves.csv'}:1: need an axis column and at least "
            f"one band column")
    axis = curves.columns[0]
    if points.columns[2] != axis:
        raise BundleError(
            f"{base / 'points.csv'}:1: axis column {points.columns[2]!r} "
            f"does not match curves axis {axis!r}")
    if guide.columns != (axis, "W"):
        raise BundleError(
            f"{base / 'guide.csv'}:1: header must be {axis},W")
    if not curves.rows:
        raise BundleError(f"{base / 'curves.csv'}: no curve rows to draw")
    if not points.rows:
        raise BundleError(f"{base / 'points.csv'}: no points to draw")
    return FigureBundle(points=points, curves=curves, guide=guide)
