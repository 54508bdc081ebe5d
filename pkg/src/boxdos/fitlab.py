"""Power-law fits of the cumulative state number and scaling reports.

The counting functions behave like alpha * eps^beta at high energy, so
we fit a straight line to (ln eps, ln N) over the staircase corner
points.  By default points with fewer than 20 accumulated states are
discarded: the power law only holds away from the lowest levels, where
the box shape still matters.  The cutoff is configurable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analytic import nboson_closed_form
from .manybody import build_nboson_spectrum
from .spectra import Spectrum, random_power_spectrum
from .staircase import Staircase, build_staircase

__all__ = [
    "PowerLawFit",
    "fit_powerlaw",
    "nboson_cutoff",
    "build_sized_nboson",
    "scaling_report",
    "EnsembleStats",
    "random_ensemble_stats",
    "DEFAULT_MIN_COUNT",
]

DEFAULT_MIN_COUNT = 20


@dataclass(frozen=True)
class PowerLawFit:
    alpha: float
    beta: float
    ln_alpha: float
    residual_rms: float
    fit_range: tuple[float, float]
    point_count: int


def fit_powerlaw(
    staircase: Staircase,
    e_lo: float | None = None,
    e_hi: float | None = None,
    *,
    min_count: int = DEFAULT_MIN_COUNT,
) -> PowerLawFit:
    """Equal-weight least squares of ln N against ln eps over staircase corners.

    Uses corner points with eps in [e_lo, e_hi] and N >= min_count;
    requires at least 3 such points.
    """
    e = np.asarray(staircase.energies, dtype=float)
    n = np.asarray(staircase.counts, dtype=float)
    mask = (e > 0) & (n >= min_count)
    if e_lo is not None:
        mask &= e >= e_lo
    if e_hi is not None:
        mask &= e <= e_hi
    e, n = e[mask], n[mask]
    if len(e) < 3:
        raise ValueError(f"need at least 3 points in range for a fit, got {len(e)}")
    if np.all(e == e[0]):
        raise ValueError("degenerate fit range: all energies equal")
    log_e, log_n = np.log(e), np.log(n)
    beta, ln_alpha = np.polyfit(log_e, log_n, 1)
    residuals = log_n - (beta * log_e + ln_alpha)
    return PowerLawFit(
        alpha=float(math.exp(ln_alpha)),
        beta=float(beta),
        ln_alpha=float(ln_alpha),
        residual_rms=float(np.sqrt(np.mean(residuals**2))),
        fit_range=(float(e[0]), float(e[-1])),
        point_count=len(e),
    )


def nboson_cutoff(base: Spectrum, n_particles: int, *, target_states: int = 20_000) -> float:
    """First-guess energy cutoff for an N-boson build of roughly target_states states.

    Predicts the N-particle count from the base spectrum's own power-law
    fit pushed through the closed-form scaling, then clips to the base
    completeness bound.  Deterministic for a fixed base spectrum.
    """
    fit1 = fit_powerlaw(build_staircase(base))
    a1 = max(fit1.alpha * fit1.beta, 1e-12)
    b1 = max(fit1.beta - 1.0, -0.99)
    form = nboson_closed_form(a1, b1, n_particles)
    e_target = (target_states / form.alpha) ** (1.0 / form.beta)
    ground = float(base.energies[0])
    return float(min(max(e_target, n_particles * ground * 1.5), base.e_max))


def build_sized_nboson(base: Spectrum, n_particles: int, *, target_states: int = 20_000) -> Spectrum:
    """N-boson spectrum grown until it holds at least target_states states.

    Starts from the closed-form cutoff estimate (which can undershoot,
    since the exact count lies below the double-counted model) and
    enlarges the cutoff geometrically until the target or the base
    completeness bound is reached.  Deterministic.
    """
    cutoff = nboson_cutoff(base, n_particles, target_states=target_states)
    while True:
        spectrum = build_nboson_spectrum(base, n_particles, cutoff)
        if spectrum.total_states >= target_states or cutoff >= base.e_max:
            return spectrum
        cutoff = min(cutoff * 1.25, base.e_max)


@dataclass(frozen=True)
class ScalingRow:
    label: str
    n_particles: int
    alpha: float
    beta: float
    ln_alpha: float
    residual_rms: float
    point_count: int


def scaling_report(
    bases: list[tuple[str, Spectrum]],
    n_values,
    *,
    target_states: int = 20_000,
    theory_params: tuple[float, float] = (0.4, 0.5),
    min_count: int = DEFAULT_MIN_COUNT,
) -> list[ScalingRow]:
    """Fit (alpha, beta) of the N-boson counting function for each base and N.

    Appends theory rows from the closed form with the given (a, b); a
    failing (base, N) combination yields a NaN row instead of aborting
    the table.
    """
    rows: list[ScalingRow] = []
    for label, base in bases:
        for n in n_values:
            try:
                spec_n = build_sized_nboson(base, n, target_states=target_states)
                fit = fit_powerlaw(build_staircase(spec_n), min_count=min_count)
                rows.append(
                    ScalingRow(
                        label, n, fit.alpha, fit.beta, fit.ln_alpha,
                        fit.residual_rms, fit.point_count,
                    )
                )
            except (ValueError, OverflowError):
                rows.append(ScalingRow(label, n, math.nan, math.nan, math.nan, math.nan, 0))
    a, b = theory_params
    for n in n_values:
        form = nboson_closed_form(a, b, n)
        rows.append(
            ScalingRow("theory", n, form.alpha, form.beta, math.log(form.alpha), 0.0, 0)
        )
    return rows


@dataclass(frozen=True)
class EnsembleStats:
    mean_beta: float
    std_beta: float
    mean_ln_alpha: float
    std_ln_alpha: float
    n_success: int


def random_ensemble_stats(
    count_spectra: int,
    levels_per_spectrum: int,
    b: float,
    n_particles: int,
    *,
    seed0: int = 12345,
    target_states: int = 4_000,
    min_count: int = DEFAULT_MIN_COUNT,
) -> EnsembleStats:
    """Ensemble mean and standard deviation of (beta, ln alpha) over random spectra.

    Spectrum i uses seed seed0 + i; per-seed failures are skipped, but at
    least 10 seeds must succeed.
    """
    betas: list[float] = []
    ln_alphas: list[float] = []
    for i in range(count_spectra):
        try:
            base = random_power_spectrum(levels_per_spectrum, b, seed0 + i)
            if n_particles == 1:
                fit = fit_powerlaw(build_staircase(base), min_count=min_count)
            else:
                spec_n = build_sized_nboson(base, n_particles, target_states=target_states)
                fit = fit_powerlaw(build_staircase(spec_n), min_count=min_count)
        except (ValueError, OverflowError):
            continue
        betas.append(fit.beta)
        ln_alphas.append(fit.ln_alpha)
    if len(betas) < 10:
        raise RuntimeError(
            f"only {len(betas)} of {count_spectra} ensemble members succeeded; need >= 10"
        )
    beta_arr = np.array(betas)
    ln_arr = np.array(ln_alphas)
    return EnsembleStats(
        mean_beta=float(beta_arr.mean()),
        std_beta=float(beta_arr.std()),
        mean_ln_alpha=float(ln_arr.mean()),
        std_ln_alpha=float(ln_arr.std()),
        n_success=len(betas),
    )
