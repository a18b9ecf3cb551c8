"""Figure renderer for truncation-point / eigenvalue-curve CSV bundles."""

from .bundle import BundleError, FigureBundle, load_bundle
from .plotting import render

__all__ = ["BundleError", "FigureBundle", "load_bundle", "render"]

__version__ = "0.1.0"
