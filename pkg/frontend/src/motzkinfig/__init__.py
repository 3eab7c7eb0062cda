"""Figure generation for motzkinlab CSV output (sweep and Schmidt-table files)."""

from motzkinfig.figures import KINDS, SCHMIDT_COLUMNS, SWEEP_COLUMNS, FigureSpec, render

__all__ = ["KINDS", "SCHMIDT_COLUMNS", "SWEEP_COLUMNS", "FigureSpec", "render"]
__version__ = "0.1.0"
