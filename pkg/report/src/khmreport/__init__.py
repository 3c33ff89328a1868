"""Publication-style figures from betakhm sweep artifacts.

This package never imports the simulation code; it reads only the stable
text artifacts (``summary.json`` and the per-cell ``khm_table.csv`` files)
and renders deterministic PNG/SVG figures from them.
"""

from .inputs import ReportInputError, load_summary, read_khm_table
from .render import ReportBundle, render

__all__ = [
    "ReportBundle",
    "ReportInputError",
    "load_summary",
    "read_khm_table",
    "render",
]
