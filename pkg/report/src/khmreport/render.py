"""Render a sweep's full figure set.

Four per-cell diagnostics (three compensated flux panels and the budget
residual panel) plus two sweep-wide ones (dissipation-sink trends and
balance bars), each written as PNG and SVG. Output is a pure function of the
inputs: cells are processed in summary order, styles and metadata are pinned,
and file names come from the cell directory names.
"""

from dataclasses import dataclass
from pathlib import Path

import matplotlib

from . import figures, style
from .inputs import ReportInputError, cell_tables, load_summary

PER_CELL = (
    ("flux_vort", figures.flux_vort_figure),
    ("flux_trace", figures.flux_trace_figure),
    ("flux_long", figures.flux_long_figure),
    ("residuals", figures.residual_panels_figure),
)
SWEEP_WIDE = (
    ("wad_trend", figures.wad_trend_figure),
    ("balance", figures.balance_bars_figure),
)
FORMATS = ("png", "svg")


@dataclass
class ReportBundle:
    summary_path: Path
    out_dir: Path
    formats: tuple = FORMATS

    def __post_init__(self):
        self.summary_path = Path(self.summary_path)
        self.out_dir = Path(self.out_dir)
        bad = [f for f in self.formats if f not in FORMATS]
        if bad:
            raise ReportInputError(f"unsupported formats {bad}; pick from {FORMATS}")


def expected_file_count(n_cells, n_formats=len(FORMATS)):
    return (len(PER_CELL) * n_cells + len(SWEEP_WIDE)) * n_formats


def _slug(cell):
    return cell["cell_dir"].replace("/", "_")


def render(bundle):
    """Write the figure set and return the written paths in order."""
    summary = load_summary(bundle.summary_path)
    pairs = cell_tables(summary, bundle.summary_path)
    bundle.out_dir.mkdir(parents=True, exist_ok=True)

    written = []

    def emit(name, fig):
        for fmt in bundle.formats:
            path = bundle.out_dir / f"{name}.{fmt}"
            style.save(fig, path)
            written.append(path)

    with matplotlib.rc_context(style.RC):
        for cell, table in pairs:
            title = f"{cell['cell_dir']}: nu={cell['nu']:g}, alpha={cell['alpha']:g}"
            for diag, builder in PER_CELL:
                emit(f"{_slug(cell)}__{diag}", builder(table, title))
        cells = [cell for cell, _ in pairs]
        for diag, builder in SWEEP_WIDE:
            emit(f"sweep__{diag}", builder(cells, f"sweep ({len(cells)} cells)"))

    return written
