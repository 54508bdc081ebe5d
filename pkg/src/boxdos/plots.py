"""Figure rendering for the report pipeline.

Each helper draws one canonical panel combination (degeneracy spikes,
counting staircase, windowed DOS, log-log counting, scaling trends) and
saves it next to the delimited data.  Rendering is headless.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .fitlab import ScalingRow
from .spectra import Spectrum
from .staircase import DosSeries, Staircase, build_staircase, degeneracy_series

__all__ = [
    "save_spectrum_panels",
    "save_counting_comparison",
    "save_loglog_counting",
    "save_scaling_trend",
    "save_nspace_grid",
    "save_degeneracy_pair",
]


def _spikes(ax, pairs, **kw):
    e = [p[0] for p in pairs]
    d = [p[1] for p in pairs]
    ax.vlines(e, 0, d, **kw)
    ax.set_ylim(bottom=0)


def save_spectrum_panels(
    path: str,
    spectrum: Spectrum,
    dos: DosSeries,
    theory_counting=None,
    theory_dos=None,
    title: str = "",
) -> None:
    """Three stacked panels: degeneracy spikes, staircase, windowed DOS."""
    st = build_staircase(spectrum)
    fig, axes = plt.subplots(3, 1, figsize=(6, 9), sharex=True)
    _spikes(axes[0], degeneracy_series(spectrum), color="C0")
    axes[0].set_ylabel("degeneracy")
    if title:
        axes[0].set_title(title)
    axes[1].step(st.energies, st.counts, where="post", color="C0")
    if theory_counting is not None:
        grid = np.linspace(0, st.energies[-1], 400)
        axes[1].plot(grid, theory_counting(grid), "k-", lw=1)
    axes[1].set_ylabel("cumulative states")
    axes[2].plot(dos.centers, dos.values, "C0.", ms=3)
    if theory_dos is not None:
        grid = np.linspace(dos.centers[0], dos.centers[-1], 400)
        axes[2].plot(grid, theory_dos(grid), "k-", lw=1)
    axes[2].set_ylabel(f"states per unit energy (window {dos.window:g})")
    axes[2].set_xlabel("energy")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_counting_comparison(path: str, labeled_staircases, bin_width: float = 40.0) -> None:
    """Overlaid staircases plus an energy histogram, one trace per box."""
    fig, axes = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
    e_top = 0.0
    for label, st, expanded in labeled_staircases:
        axes[0].step(st.energies, st.counts, where="post", label=label, lw=1)
        e_top = max(e_top, st.energies[-1])
    axes[0].set_ylabel("cumulative states")
    axes[0].legend()
    bins = np.arange(0.0, e_top + bin_width, bin_width)
    for label, st, expanded in labeled_staircases:
        axes[1].hist(expanded, bins=bins, histtype="step", label=label)
    axes[1].set_xlabel("energy")
    axes[1].set_ylabel(f"states per bin (width {bin_width:g})")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_loglog_counting(path: str, labeled_staircases, title: str = "") -> None:
    """Log-log counting curves; accepts (label, Staircase) pairs."""
    fig, ax = plt.subplots(figsize=(6, 5))
    for label, st in labeled_staircases:
        ax.loglog(st.energies, st.counts, lw=1, label=label)
    ax.set_xlabel("energy")
    ax.set_ylabel("cumulative states")
    if title:
        ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_scaling_trend(
    path: str,
    rows: list[ScalingRow],
    quantity: str,
    error_bars: dict[int, float] | None = None,
) -> None:
    """Fitted beta or ln(alpha) against particle number, one series per label.

    quantity is "beta" or "ln_alpha"; error_bars maps N to a standard
    deviation for the random-ensemble series.
    """
    by_label: dict[str, list[ScalingRow]] = {}
    for r in rows:
        by_label.setdefault(r.label, []).append(r)
    fig, ax = plt.subplots(figsize=(6, 5))
    for label, series in by_label.items():
        series = sorted(series, key=lambda r: r.n_particles)
        ns = [r.n_particles for r in series]
        ys = [getattr(r, quantity) for r in series]
        style = dict(ls="--", marker=None) if label == "theory" else dict(marker="o")
        if error_bars is not None and label == "random":
            errs = [error_bars.get(n, 0.0) for n in ns]
            ax.errorbar(ns, ys, yerr=errs, label=label, capsize=3, **style)
        else:
            ax.plot(ns, ys, label=label, **style)
    ax.set_xlabel("particle number")
    ax.set_ylabel("beta" if quantity == "beta" else "ln(alpha)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_nspace_grid(path: str, n_max: int = 10, radii=(6.0, math.sqrt(65.0))) -> None:
    """Quantum-number lattice for the 2-D square with constant-energy arcs."""
    fig, ax = plt.subplots(figsize=(6, 6))
    for nx in range(1, n_max + 1):
        for ny in range(1, n_max + 1):
            ax.text(nx, ny, str(nx * nx + ny * ny), ha="center", va="center", fontsize=7)
    theta = np.linspace(0, math.pi / 2, 200)
    for r in radii:
        ax.plot(r * np.cos(theta), r * np.sin(theta), ls=":", lw=1)
    ax.set_xlim(0, n_max + 1)
    ax.set_ylim(0, n_max + 1)
    ax.set_xlabel("n_x")
    ax.set_ylabel("n_y")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_degeneracy_pair(path: str, intact: Spectrum, lifted: Spectrum) -> None:
    """Degeneracy spikes and staircases before and after degeneracy lifting."""
    fig, axes = plt.subplots(2, 2, figsize=(8, 6), sharex=True)
    for col, (label, spec) in enumerate([("degenerate", intact), ("lifted", lifted)]):
        _spikes(axes[0][col], degeneracy_series(spec), color="C0")
        axes[0][col].set_title(label)
        axes[0][col].set_ylabel("degeneracy")
        st = build_staircase(spec)
        axes[1][col].step(st.energies, st.counts, where="post", color="C0")
        axes[1][col].set_ylabel("cumulative states")
        axes[1][col].set_xlabel("energy")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
