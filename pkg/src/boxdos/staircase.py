"""Cumulative state number and windowed density of states.

The cumulative count N(eps) is the number of states with energy <= eps,
a right-continuous staircase with one step per distinct level.  The
numerical DOS is the windowed finite difference
[N(c + w/2) - N(c - w/2)] / w, i.e. states per unit energy in the
half-open bin (c - w/2, c + w/2].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectra import Level, Spectrum

__all__ = [
    "Staircase",
    "DosSeries",
    "build_staircase",
    "cumulative_count",
    "dos_window",
    "dos_series",
    "default_centers",
    "degeneracy_series",
    "split_degeneracies",
]


@dataclass(frozen=True)
class Staircase:
    """Corner points (energy_i, count_i) of the cumulative state number."""

    energies: np.ndarray
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts[-1]) if len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.energies)


@dataclass(frozen=True)
class DosSeries:
    centers: np.ndarray
    values: np.ndarray
    window: float


def build_staircase(spectrum: Spectrum) -> Staircase:
    """One corner per distinct level; the step height at eps_i is its degeneracy."""
    return Staircase(spectrum.energies, np.cumsum(spectrum.degeneracies))


def cumulative_count(staircase: Staircase, energy: float) -> int:
    """Number of states with energy <= the given energy (0 below the ground state)."""
    if len(staircase) == 0:
        return 0
    i = int(np.searchsorted(staircase.energies, energy, side="right"))
    return 0 if i == 0 else int(staircase.counts[i - 1])


def dos_window(spectrum: Spectrum, window: float, centers) -> DosSeries:
    """Windowed numerical derivative of the cumulative count at the given centers."""
    if window <= 0:
        raise ValueError(f"window must be positive, got {window}")
    centers = np.asarray(centers, dtype=float)
    st = build_staircase(spectrum)
    hi = np.searchsorted(st.energies, centers + window / 2.0, side="right")
    lo = np.searchsorted(st.energies, centers - window / 2.0, side="right")
    padded = np.concatenate(([0], st.counts))
    values = (padded[hi] - padded[lo]) / window
    return DosSeries(centers, values, float(window))


def default_centers(e_lo: float, e_hi: float, window: float, *, tile: bool = False) -> np.ndarray:
    """Uniform center grid: spacing window/2 (overlapping) or window (disjoint tiling)."""
    step = window if tile else window / 2.0
    start = e_lo + window / 2.0
    n = max(int(np.floor((e_hi - window / 2.0 - start) / step)) + 1, 0)
    return start + step * np.arange(n)


def dos_series(
    spectrum: Spectrum,
    window: float,
    e_lo: float = 0.0,
    e_hi: float | None = None,
    *,
    tile: bool = False,
) -> DosSeries:
    """DOS on the default center grid over [e_lo, e_hi]."""
    if e_hi is None:
        e_hi = spectrum.e_max
    return dos_window(spectrum, window, default_centers(e_lo, e_hi, window, tile=tile))


def degeneracy_series(spectrum: Spectrum) -> list[tuple[float, int]]:
    """The spike plot data: (energy, degeneracy) per distinct level."""
    return [(lv.energy, lv.degeneracy) for lv in spectrum.levels]


def split_degeneracies(spectrum: Spectrum, delta: float) -> Spectrum:
    """Lift each d-fold level into d unit-height levels spread over +/- delta.

    Models a weak symmetry-breaking perturbation: the cumulative count is
    unchanged at any energy more than delta away from an original level.
    """
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    levels = []
    for lv in spectrum.levels:
        d = lv.degeneracy
        if d == 1:
            levels.append(Level(lv.energy, 1, lv.labels))
            continue
        offsets = np.linspace(-delta, delta, d)
        for off in offsets:
            levels.append(Level(lv.energy + float(off), 1))
    levels.sort(key=lambda lv: lv.energy)
    return Spectrum(tuple(levels), spectrum.e_max)
