"""Deterministic synthetic sweep whose tables follow the exact cascade laws.

Used to regenerate the golden reference images and by the tests: with
d_vort = -2 eta l, d_bar = eta l^3 / 4 and d_par = eta l^3 / 8 the
compensated panels must come out flat on their reference lines. Everything
is literal arithmetic (no randomness), so the artifact bytes never change.
"""

import json
from pathlib import Path

import numpy as np

MEASURED = (
    "gamma_bar", "gamma_par", "c_bar",
    "d_bar", "d_par", "d_vort",
    "theta_bar", "theta_par", "q_bar",
    "theta_bar_coord", "theta_par_coord",
    "residual_v", "residual_long", "residual_w",
)
NOISE = ("a_bar", "a_par", "a_vort")

CELLS = [
    {"nu": 0.005, "alpha": 0.15, "eta": 0.12, "omega_sq": 9.0},
    {"nu": 0.005, "alpha": 0.30, "eta": 0.12, "omega_sq": 7.0},
    {"nu": 0.020, "alpha": 0.15, "eta": 0.30, "omega_sq": 6.5},
    {"nu": 0.020, "alpha": 0.30, "eta": 0.30, "omega_sq": 5.0},
]


def _table_text(nu, alpha, eta):
    l = np.geomspace(0.04, 1.2, 44)
    cols = {name: np.zeros_like(l) for name in MEASURED}
    cols["d_vort"] = -2.0 * eta * l
    cols["d_bar"] = 0.25 * eta * l**3
    cols["d_par"] = 0.125 * eta * l**3
    cols["gamma_bar"] = 1.3 - 0.4 * l**2
    cols["gamma_par"] = 0.9 - 0.3 * l**2
    cols["c_bar"] = 2.0 * eta / nu * (1.0 - l**2 / 1.5)
    noise = {
        "a_bar": 0.05 * (1.0 - l**2 / 2.0),
        "a_par": 0.025 * (1.0 - l**2 / 2.0),
        "a_vort": eta * (1.0 - l**2 / 2.0),
    }
    ses = {name: 0.02 * np.maximum(np.abs(cols[name]), 1e-6)
           for name in MEASURED}
    meta = {
        "geometry": "periodic", "nu": nu, "alpha": alpha, "beta": 0.0,
        "f0": 0.0, "eta": eta, "n_snapshots": 64,
        "coriolis_weight": "synthetic exact-law table",
    }

    lines = ["# khm-table v1", "# meta: " + json.dumps(meta, sort_keys=True)]
    header = ["l"]
    for name in MEASURED:
        header += [name, name + "_se"]
    header += list(NOISE)
    lines.append(",".join(header))
    for i in range(l.size):
        rec = [repr(float(l[i]))]
        for name in MEASURED:
            rec += [repr(float(cols[name][i])), repr(float(ses[name][i]))]
        for name in NOISE:
            rec.append(repr(float(noise[name][i])))
        lines.append(",".join(rec))
    return "\n".join(lines) + "\n"


def make_synthetic_sweep(outdir):
    """Write summary.json plus per-cell tables; returns the summary path."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    cells_out = []
    for spec in CELLS:
        nu, alpha, eta, z = (spec["nu"], spec["alpha"], spec["eta"],
                             spec["omega_sq"])
        label = f"cell_{nu:g}_{alpha:g}"
        cell_dir = outdir / label
        cell_dir.mkdir(exist_ok=True)
        (cell_dir / "khm_table.csv").write_text(_table_text(nu, alpha, eta))
        cells_out.append({
            "nu": nu, "alpha": alpha, "cell_dir": label,
            "n_members": 2,
            "balance": {
                "n_samples": 64, "t_window": [10.0, 110.0],
                "energy_residual": 0.011, "enstrophy_residual": -0.016,
                "regularity_ratio": 0.62,
                "energy_residual_se": 0.008, "enstrophy_residual_se": 0.010,
                "regularity_se": 0.05,
            },
            "wad": {
                "nu_term": nu * z, "alpha_term": alpha * z,
                "nu_term_first_power": nu * np.sqrt(z),
                "alpha_term_first_power": alpha * np.sqrt(z),
                "l_nu": 0.2 * (nu * z) ** 0.45,
            },
            "cascade": {
                "c_direct": -2.0 * eta, "c_direct_se": 0.02 * eta,
                "c_D": 0.25 * eta, "c_D_se": 0.01 * eta,
                "c_long": 0.125 * eta, "c_long_se": 0.01 * eta,
                "eta": eta, "theta_slope": None, "q_slope": None,
            },
            "khm_table": f"{label}/khm_table.csv",
        })
    summary = {
        "schema": "betakhm-sweep/1",
        "master_seed": 915100,
        "members_per_cell": 2,
        "t_avg": 100.0,
        "wad_trend": _trend(cells_out),
        "cells": cells_out,
    }
    path = outdir / "summary.json"
    path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return path


def _trend(cells):
    by_alpha, by_nu = {}, {}
    for c in cells:
        by_alpha.setdefault(c["alpha"], []).append((c["nu"], c["wad"]["nu_term"]))
        by_nu.setdefault(c["nu"], []).append((c["alpha"], c["wad"]["alpha_term"]))
    return {
        "nu_term_decreasing_in_nu": all(
            b[1] < a[1] for pts in by_alpha.values()
            for a, b in zip(sorted(pts), sorted(pts)[1:])),
        "alpha_term_decreasing_in_alpha": all(
            b[1] < a[1] for pts in by_nu.values()
            for a, b in zip(sorted(pts), sorted(pts)[1:])),
    }
