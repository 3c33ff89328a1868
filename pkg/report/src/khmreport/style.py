"""Fixed rendering style so identical inputs give identical bytes.

Everything that could differ between runs or hosts is pinned: backend, font,
figure geometry, the SVG id hash salt, and the output metadata (no dates, no
library version strings).
"""

import matplotlib

matplotlib.use("Agg")

RC = {
    "figure.figsize": (6.4, 4.2),
    "figure.dpi": 100,
    "savefig.dpi": 130,
    "font.family": "DejaVu Sans",
    "font.size": 9.5,
    "axes.grid": True,
    "grid.alpha": 0.35,
    "grid.linewidth": 0.5,
    "axes.titlesize": 10.5,
    "legend.fontsize": 8.5,
    "lines.linewidth": 1.4,
    "svg.hashsalt": "khmreport",
    "svg.fonttype": "path",  # glyphs as paths: self-contained, byte-stable
}

PNG_METADATA = {"Software": "khmreport"}
SVG_METADATA = {"Creator": "khmreport", "Date": None}


def save(fig, path):
    """Write one figure; format from the suffix, metadata pinned."""
    suffix = path.suffix.lstrip(".")
    meta = PNG_METADATA if suffix == "png" else SVG_METADATA
    fig.savefig(path, format=suffix, metadata=dict(meta))
