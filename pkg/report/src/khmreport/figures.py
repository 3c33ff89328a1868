"""Figure builders: parsed artifacts in, matplotlib Figure out.

Builders are pure given their inputs; file writing and style pinning live in
``render`` / ``style``. Compensated-flux panels divide the measured flux
columns by their expected power of the separation so a clean cascade shows
as a flat curve on the drawn reference level.
"""

import numpy as np
from matplotlib.figure import Figure

_REFERENCE_STYLE = dict(color="0.25", linestyle="--", linewidth=1.1)
_BAND_STYLE = dict(alpha=0.25, linewidth=0)


def _new_axes(title):
    fig = Figure()
    ax = fig.add_subplot()
    ax.set_title(title)
    ax.set_xscale("log")
    ax.set_xlabel("separation l")
    return fig, ax


def _compensated(ax, table, column, power):
    l = table.l
    y = table.columns[column] / l**power
    band = 3.0 * table.se(column) / l**power
    ax.fill_between(l, y - band, y + band, **_BAND_STYLE)
    ax.plot(l, y, label=f"{column} / l^{power}" if power > 1 else f"{column} / l")


def flux_vort_figure(table, title):
    """Vorticity flux over l against the reference level -2 eta."""
    fig, ax = _new_axes(title)
    _compensated(ax, table, "d_vort", 1)
    ax.axhline(-2.0 * table.eta, label=f"-2 eta = {-2.0 * table.eta:.4g}",
               **_REFERENCE_STYLE)
    ax.legend()
    return fig


def flux_trace_figure(table, title):
    """Velocity-trace third order over l^3 against eta / 4."""
    fig, ax = _new_axes(title)
    _compensated(ax, table, "d_bar", 3)
    ax.axhline(table.eta / 4.0, label=f"eta/4 = {table.eta / 4.0:.4g}",
               **_REFERENCE_STYLE)
    ax.legend()
    return fig


def flux_long_figure(table, title):
    """Longitudinal third order over l^3 against eta / 8."""
    fig, ax = _new_axes(title)
    _compensated(ax, table, "d_par", 3)
    ax.axhline(table.eta / 8.0, label=f"eta/8 = {table.eta / 8.0:.4g}",
               **_REFERENCE_STYLE)
    ax.legend()
    return fig


def residual_panels_figure(table, title):
    """Three stacked budget-residual panels with 3-standard-error bands.

    The columns are already normalized by the cascade scale (eta l^3 for the
    velocity and longitudinal budgets, eta l for the vorticity budget), so a
    correct stationary run shows noise around zero inside the band.
    """
    fig = Figure(figsize=(6.4, 6.4))
    axes = fig.subplots(3, 1, sharex=True)
    names = ("residual_v", "residual_long", "residual_w")
    for ax, name in zip(axes, names):
        band = 3.0 * table.se(name)
        ax.fill_between(table.l, -band, band, **_BAND_STYLE)
        ax.plot(table.l, table.columns[name])
        ax.axhline(0.0, color="0.25", linewidth=0.8)
        ax.set_xscale("log")
        ax.set_ylabel(name)
    axes[0].set_title(title)
    axes[-1].set_xlabel("separation l")
    fig.align_ylabels(axes)
    return fig


def wad_trend_figure(cells, title):
    """Dissipation sinks across the sweep: nu <omega^2> vs nu (grouped by
    alpha) and alpha <omega^2> vs alpha (grouped by nu); both must head to
    zero along their axes for the cascade laws to apply."""
    fig = Figure(figsize=(7.6, 3.8))
    ax_nu, ax_al = fig.subplots(1, 2)

    by_alpha, by_nu = {}, {}
    for c in cells:
        by_alpha.setdefault(c["alpha"], []).append((c["nu"], c["wad"]["nu_term"]))
        by_nu.setdefault(c["nu"], []).append((c["alpha"], c["wad"]["alpha_term"]))

    for alpha in sorted(by_alpha):
        pts = sorted(by_alpha[alpha])
        ax_nu.plot([p[0] for p in pts], [p[1] for p in pts],
                   marker="o", label=f"alpha={alpha:g}")
    for nu in sorted(by_nu):
        pts = sorted(by_nu[nu])
        ax_al.plot([p[0] for p in pts], [p[1] for p in pts],
                   marker="s", label=f"nu={nu:g}")

    for ax, xlabel, ylabel in ((ax_nu, "nu", "nu * mean vorticity^2"),
                               (ax_al, "alpha", "alpha * mean vorticity^2")):
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.legend()
    ax_nu.set_title(title)
    return fig


def balance_bars_figure(cells, title):
    """Stationary energy/enstrophy balance residuals per cell, with 3 SE
    error bars and five-percent guide lines."""
    fig = Figure(figsize=(7.0, 4.0))
    ax = fig.add_subplot()
    x = np.arange(len(cells))
    width = 0.38
    energy = [c["balance"]["energy_residual"] for c in cells]
    enstrophy = [c["balance"]["enstrophy_residual"] for c in cells]
    e_err = [3.0 * c["balance"]["energy_residual_se"] for c in cells]
    z_err = [3.0 * c["balance"]["enstrophy_residual_se"] for c in cells]
    ax.bar(x - width / 2, energy, width, yerr=e_err, capsize=3, label="energy")
    ax.bar(x + width / 2, enstrophy, width, yerr=z_err, capsize=3,
           label="enstrophy")
    for level in (-0.05, 0.05):
        ax.axhline(level, color="0.25", linestyle=":", linewidth=1.0)
    ax.axhline(0.0, color="0.25", linewidth=0.8)
    ax.set_xticks(x)
    ax.set_xticklabels([c["cell_dir"] for c in cells], rotation=20, ha="right")
    ax.set_ylabel("relative balance residual")
    ax.set_title(title)
    ax.legend()
    return fig
