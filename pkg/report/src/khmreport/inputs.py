"""Readers for the harness's text artifacts.

The table format is two comment lines (format tag, then run metadata as
JSON) followed by a CSV body whose header interleaves each measured column
with its standard-error partner; trailing ``#`` comment rows (for example a
stored fit) are ignored. The summary is JSON with a ``schema`` tag that must
match the version this package was written against.
"""

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

TABLE_TAG = "# khm-table v1"
SUMMARY_SCHEMA = "betakhm-sweep/1"
_CELL_KEYS = ("nu", "alpha", "cell_dir", "n_members", "balance", "wad", "khm_table")


class ReportInputError(ValueError):
    """Unreadable or out-of-contract input (CLI exit code 2)."""


@dataclass
class KhmTable:
    """Parsed table: separation grid, named columns, and run metadata."""

    l: np.ndarray
    columns: dict
    meta: dict

    def se(self, name):
        return self.columns[name + "_se"]

    @property
    def eta(self):
        return float(self.meta["eta"])


def read_khm_table(path):
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise ReportInputError(f"cannot read table {path}: {exc}") from exc
    if not lines or not lines[0].startswith(TABLE_TAG):
        raise ReportInputError(f"{path}: not a '{TABLE_TAG}' file")
    if len(lines) < 3 or not lines[1].startswith("# meta: "):
        raise ReportInputError(f"{path}: missing metadata line")
    meta = json.loads(lines[1][len("# meta: "):])
    body = [ln for ln in lines[2:] if ln and not ln.startswith("#")]
    reader = csv.reader(body)
    header = next(reader)
    rows = [[float(v) for v in rec] for rec in reader]
    if not rows:
        raise ReportInputError(f"{path}: table has no data rows")
    data = np.asarray(rows, dtype=float).T
    columns = dict(zip(header, data))
    if "l" not in columns:
        raise ReportInputError(f"{path}: no 'l' column")
    l = columns.pop("l")
    for needed in ("d_bar", "d_par", "d_vort",
                   "residual_v", "residual_long", "residual_w"):
        if needed not in columns:
            raise ReportInputError(f"{path}: missing column {needed!r}")
    if "eta" not in meta:
        raise ReportInputError(f"{path}: metadata has no 'eta'")
    return KhmTable(l=l, columns=columns, meta=meta)


def load_summary(path):
    """Read and structurally check ``summary.json``."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise ReportInputError(f"cannot read summary {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ReportInputError(f"{path}: not valid JSON ({exc})") from exc
    tag = doc.get("schema")
    if tag != SUMMARY_SCHEMA:
        raise ReportInputError(
            f"{path}: schema {tag!r} does not match {SUMMARY_SCHEMA!r}"
        )
    cells = doc.get("cells")
    if not isinstance(cells, list):
        raise ReportInputError(f"{path}: 'cells' must be a list")
    if not cells:
        raise ReportInputError(f"{path}: cell list is empty, nothing to render")
    for i, cell in enumerate(cells):
        missing = [k for k in _CELL_KEYS if k not in cell]
        if missing:
            raise ReportInputError(f"{path}: cell {i} missing keys {missing}")
    return doc


def cell_tables(summary, summary_path):
    """Resolve and read every cell's table, keyed by cell directory name.

    Table paths in the summary are relative to the summary file's directory.
    """
    base = Path(summary_path).resolve().parent
    out = []
    for cell in summary["cells"]:
        table = read_khm_table(base / cell["khm_table"])
        out.append((cell, table))
    return out
