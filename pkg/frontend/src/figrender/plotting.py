"""Rendering a validated bundle to SVG and PNG.

Styling is fixed: red markers for the exact truncation solutions, blue
solid lines for the eigenvalue curves, a green dashed guide where the
bundle provides one. Output is deterministic: equal bundles yield
byte-identical SVG.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .bundle import FigureBundle, load_bundle  # noqa: E402

__all__ = ["render"]

_EXPECTED_AXIS = {1: "a", 2: "b", 3: "a"}
_DPI = 150


def render(bundle_dir, out_path, figure_id: int,
           size: tuple[float, float] = (8.0, 6.0)) -> tuple[Path, Path]:
    """Draw one figure from bundle_dir; write <stem>.svg and <stem>.png.

    figure_id selects the expected axis variable (1 and 3 scan the inverse
    coupling, 2 the slope coupling) and the output title. Returns the two
    paths written.
    """
    if figure_id not in _EXPECTED_AXIS:
        raise ValueError("figure id must be 1, 2, or 3")
    if size[0] <= 0 or size[1] <= 0:
        raise ValueError("size must be positive")
    bundle = load_bundle(bundle_dir)
    expected = _EXPECTED_AXIS[figure_id]
    if bundle.axis != expected:
        raise ValueError(
            f"figure {figure_id} expects axis {expected!r}, bundle has "
            f"{bundle.axis!r}")

    stem = Path(out_path)
    if stem.suffix.lower() in (".svg", ".png"):
        stem = stem.with_suffix("")
    svg_path = stem.with_suffix(".svg")
    png_path = stem.with_suffix(".png")
    stem.parent.mkdir(parents=True, exist_ok=True)

    with matplotlib.rc_context({"svg.hashsalt": "figrender"}):
        fig, ax = plt.subplots(figsize=size)
        try:
            _draw(ax, bundle, figure_id)
            fig.savefig(svg_path, format="svg", metadata={"Date": None})
            fig.savefig(png_path, format="png", dpi=_DPI)
        finally:
            plt.close(fig)
    return svg_path, png_path


def _draw(ax, bundle: FigureBundle, figure_id: int) -> None:
    axis = bundle.axis
    grid = [row[0] for row in bundle.curves.rows]
    n_bands = len(bundle.curves.columns) - 1
    for band in range(n_bands):
        values = [row[band + 1] for row in bundle.curves.rows]
        ax.plot(grid, values, color="blue", linewidth=1.0, zorder=2)

    if bundle.guide.rows:
        gx = [row[0] for row in bundle.guide.rows]
        gy = [row[1] for row in bundle.guide.rows]
        ax.plot(gx, gy, color="green", linestyle="--", linewidth=1.2,
                zorder=3)

    px = [row[2] for row in bundle.points.rows]
    py = [row[3] for row in bundle.points.rows]
    ax.scatter(px, py, color="red", s=18, zorder=4)

    ax.set_xlabel(axis)
    ax.set_ylabel("W")
    ax.set_title(f"figure {figure_id}")
