"""Command-line front end.

Subcommands: spectrum, staircase, dos, nboson, analytic, fit, sweep,
reproduce.  All outputs are CSV (written atomically) and the reproduce
targets additionally render a PNG figure.  Exit codes: 0 ok, 2 usage
error, 3 validation error, 4 computational failure.
"""

from __future__ import annotations

import math
import os
import sys

import click
import numpy as np

from . import csvio, plots
from .analytic import beta_integral, nboson_closed_form, weyl_counting, weyl_dos
from .fitlab import (
    DEFAULT_MIN_COUNT,
    ScalingRow,
    fit_powerlaw,
    random_ensemble_stats,
)
from .manybody import build_nboson_spectrum, nboson_configurations
from .specfun import bessel_zero
from .spectra import (
    Level,
    Spectrum,
    enumerate_cylinder,
    enumerate_hyperbox,
    enumerate_relativistic_square,
    enumerate_sphere,
    random_power_spectrum,
)
from .staircase import (
    Staircase,
    build_staircase,
    default_centers,
    dos_window,
    degeneracy_series,
    split_degeneracies,
)

DEFAULT_SEED = 12345
RECTANGLE_LENGTHS = (1.0, 2.0 / math.e, math.e / 2.0)

GEOMETRIES = ("cube", "square", "rectangle", "hyperbox", "sphere", "cylinder", "relsquare")


def _seed_option(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("BOXDOS_SEED")
    return int(env) if env else DEFAULT_SEED


def _parse_lengths(text: str) -> list[float]:
    try:
        lengths = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"--lengths must be comma-separated numbers, got {text!r}") from None
    return lengths


def _build_geometry(
    geometry: str,
    e_max: float | None,
    k_max: float | None,
    lengths: str | None,
    height: float,
    radius: float,
    normalize: bool,
    with_labels: bool,
) -> Spectrum:
    if geometry == "sphere":
        if k_max is None:
            raise ValueError("--k-max is required for the sphere (flag --k-max)")
        return enumerate_sphere(k_max, with_labels=with_labels)
    if e_max is None:
        raise ValueError(f"--e-max is required for geometry {geometry} (flag --e-max)")
    if geometry == "cube":
        return enumerate_hyperbox([1.0, 1.0, 1.0], e_max, with_labels=with_labels)
    if geometry == "square":
        return enumerate_hyperbox([1.0, 1.0], e_max, with_labels=with_labels)
    if geometry == "rectangle":
        return enumerate_hyperbox(RECTANGLE_LENGTHS, e_max, with_labels=with_labels)
    if geometry == "hyperbox":
        if not lengths:
            raise ValueError("--lengths is required for geometry hyperbox (flag --lengths)")
        return enumerate_hyperbox(
            _parse_lengths(lengths), e_max, normalize=normalize, with_labels=with_labels
        )
    if geometry == "cylinder":
        return enumerate_cylinder(height, radius, e_max, normalize=normalize)
    if geometry == "relsquare":
        return enumerate_relativistic_square(e_max, with_labels=with_labels)
    raise ValueError(f"unknown geometry {geometry!r} (flag --geometry)")


def _geometry_options(fn):
    decorators = [
        click.option("--geometry", type=click.Choice(GEOMETRIES), required=True),
        click.option("--e-max", type=float, default=None, help="Energy cutoff."),
        click.option("--k-max", type=float, default=None, help="Bessel-zero cutoff (sphere)."),
        click.option("--lengths", type=str, default=None, help="Hyperbox side lengths, comma-separated."),
        click.option("--height", type=float, default=1.0, help="Cylinder height."),
        click.option("--radius", type=float, default=1.0, help="Cylinder radius."),
        click.option("--raw", is_flag=True, help="Skip unit-volume normalization."),
    ]
    for dec in reversed(decorators):
        fn = dec(fn)
    return fn


@click.group()
def cli():
    """Spectra, state counting, and density of states for rigid boxes."""


@cli.command()
@_geometry_options
@click.option("--labels", "with_labels", is_flag=True, help="Include quantum-number labels.")
@click.option("-o", "--output", required=True, type=click.Path())
def spectrum(geometry, e_max, k_max, lengths, height, radius, raw, with_labels, output):
    """Enumerate a single-particle spectrum and write energy,degeneracy CSV."""
    spec = _build_geometry(
        geometry, e_max, k_max, lengths, height, radius, not raw, with_labels
    )
    header, rows = csvio.spectrum_rows(spec, with_labels=with_labels)
    csvio.write_rows(output, header, rows)
    click.echo(f"{output}: {len(spec)} levels, {spec.total_states} states")


def _load_or_build(input_path, geometry, e_max, k_max, lengths, height, radius, raw):
    if input_path:
        return csvio.read_spectrum_csv(input_path)
    if geometry is None:
        raise ValueError("either --input or --geometry is required")
    return _build_geometry(geometry, e_max, k_max, lengths, height, radius, not raw, False)


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True), default=None,
              help="Spectrum CSV instead of a geometry.")
@click.option("--geometry", type=click.Choice(GEOMETRIES), default=None)
@click.option("--e-max", type=float, default=None)
@click.option("--k-max", type=float, default=None)
@click.option("--lengths", type=str, default=None)
@click.option("--height", type=float, default=1.0)
@click.option("--radius", type=float, default=1.0)
@click.option("--raw", is_flag=True)
@click.option("-o", "--output", required=True, type=click.Path())
def staircase(input_path, geometry, e_max, k_max, lengths, height, radius, raw, output):
    """Write the cumulative state number as energy,N CSV."""
    spec = _load_or_build(input_path, geometry, e_max, k_max, lengths, height, radius, raw)
    header, rows = csvio.staircase_rows(build_staircase(spec))
    csvio.write_rows(output, header, rows)
    click.echo(f"{output}: {len(rows)} steps")


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True), default=None)
@click.option("--geometry", type=click.Choice(GEOMETRIES), default=None)
@click.option("--e-max", type=float, default=None)
@click.option("--k-max", type=float, default=None)
@click.option("--lengths", type=str, default=None)
@click.option("--height", type=float, default=1.0)
@click.option("--radius", type=float, default=1.0)
@click.option("--raw", is_flag=True)
@click.option("--window", type=float, required=True, help="Width of the counting window.")
@click.option("--tile", is_flag=True, help="Disjoint windows instead of 50% overlap.")
@click.option("-o", "--output", required=True, type=click.Path())
def dos(input_path, geometry, e_max, k_max, lengths, height, radius, raw, window, tile, output):
    """Windowed numerical density of states as center,g CSV."""
    spec = _load_or_build(input_path, geometry, e_max, k_max, lengths, height, radius, raw)
    centers = default_centers(0.0, spec.e_max, window, tile=tile)
    series = dos_window(spec, window, centers)
    header, rows = csvio.dos_rows(series)
    csvio.write_rows(output, header, rows)
    click.echo(f"{output}: {len(rows)} windows of width {window:g}")


@cli.command()
@click.option("--base", type=click.Choice(("cube", "rectangle", "sphere", "random", "csv")),
              required=True)
@click.option("--input", "input_path", type=click.Path(exists=True), default=None,
              help="Base spectrum CSV when --base csv.")
@click.option("--n", "n_particles", type=int, required=True)
@click.option("--e-max", type=float, required=True, help="N-particle energy cutoff.")
@click.option("--base-e-max", type=float, default=None,
              help="Single-particle cutoff (defaults to --e-max).")
@click.option("--k-max", type=float, default=None, help="Sphere base cutoff.")
@click.option("--levels", type=int, default=500, help="Levels in a random base.")
@click.option("--seed", type=int, default=None)
@click.option("--dump-configs", type=click.Path(), default=None,
              help="Also write the indices|energy configuration list.")
@click.option("-o", "--output", required=True, type=click.Path())
def nboson(base, input_path, n_particles, e_max, base_e_max, k_max, levels, seed,
           dump_configs, output):
    """Build the N-identical-boson spectrum on a single-particle base."""
    base_cut = base_e_max if base_e_max is not None else e_max
    if base == "cube":
        single = enumerate_hyperbox([1.0, 1.0, 1.0], base_cut)
    elif base == "rectangle":
        single = enumerate_hyperbox(RECTANGLE_LENGTHS, base_cut)
    elif base == "sphere":
        scale = (3.0 * math.pi**2 / 4.0) ** (1.0 / 3.0)
        single = enumerate_sphere(k_max if k_max is not None else math.sqrt(base_cut) * scale)
    elif base == "random":
        single = random_power_spectrum(levels, 0.5, _seed_option(seed))
    else:
        if not input_path:
            raise ValueError("--input is required with --base csv")
        single = csvio.read_spectrum_csv(input_path)
    spec_n = build_nboson_spectrum(single, n_particles, e_max)
    header, rows = csvio.spectrum_rows(spec_n)
    csvio.write_rows(output, header, rows)
    if dump_configs:
        configs = nboson_configurations(single, n_particles, e_max)
        csvio.write_rows(dump_configs, *csvio.config_rows(configs))
    click.echo(f"{output}: {len(spec_n)} levels, {spec_n.total_states} states")


@cli.command()
@click.option("--what", type=click.Choice(("weyl", "nboson-table", "beta-integral")),
              required=True)
@click.option("--dims", type=str, default="1,2,3,4,5,6", help="Dimensions for the Weyl table.")
@click.option("--energies", type=str, default="1,4,16,64,256", help="Sample energies.")
@click.option("--a", type=float, default=1.0, help="Single-particle DOS amplitude.")
@click.option("--b", type=str, default="-0.5,0,0.5,1", help="DOS exponents (N-boson table).")
@click.option("--n-max", type=int, default=8, help="Largest particle number.")
@click.option("--exponents", type=str, default=None,
              help="n,m pair for the convolution integral.")
@click.option("-o", "--output", required=True, type=click.Path())
def analytic(what, dims, energies, a, b, n_max, exponents, output):
    """Closed-form counting functions, DOS tables, and convolution integrals."""
    e_list = [float(t) for t in energies.split(",") if t.strip()]
    if what == "weyl":
        rows = []
        for d in (int(t) for t in dims.split(",") if t.strip()):
            for e in e_list:
                rows.append([d, e, weyl_counting(d, e), weyl_dos(d, e)])
        csvio.write_rows(output, ["D", "energy", "counting", "dos"], rows)
    elif what == "nboson-table":
        rows = []
        for b_val in (float(t) for t in b.split(",") if t.strip()):
            for n in range(1, n_max + 1):
                form = nboson_closed_form(a, b_val, n)
                rows.append([b_val, n, form.coefficient, form.exponent, form.alpha, form.beta])
        csvio.write_rows(output, ["b", "N", "g_coeff", "g_exponent", "alpha", "beta"], rows)
    else:
        if not exponents:
            raise ValueError("--exponents n,m is required with --what beta-integral")
        n_exp, m_exp = (float(t) for t in exponents.split(","))
        rows = [[n_exp, m_exp, e, beta_integral(n_exp, m_exp, e)] for e in e_list]
        csvio.write_rows(output, ["n", "m", "E", "value"], rows)
    click.echo(f"{output}: written")


@cli.command()
@click.option("--input", "input_path", type=click.Path(exists=True), required=True,
              help="Staircase (energy,N) or spectrum (energy,degeneracy) CSV.")
@click.option("--e-lo", type=float, default=None)
@click.option("--e-hi", type=float, default=None)
@click.option("--min-count", type=int, default=DEFAULT_MIN_COUNT)
@click.option("--label", type=str, default="data")
@click.option("-o", "--output", required=True, type=click.Path())
def fit(input_path, e_lo, e_hi, min_count, label, output):
    """Power-law fit of the cumulative state number on log-log axes."""
    with open(input_path) as fh:
        header = fh.readline().strip().split(",")
    if header[:2] == ["energy", "degeneracy"]:
        st = build_staircase(csvio.read_spectrum_csv(input_path))
    else:
        st = csvio.read_staircase_csv(input_path)
    result = fit_powerlaw(st, e_lo, e_hi, min_count=min_count)
    row = ScalingRow(label, 1, result.alpha, result.beta, result.ln_alpha,
                     result.residual_rms, result.point_count)
    csvio.write_rows(output, *csvio.fit_rows([row]))
    click.echo(f"{output}: alpha={result.alpha:.6g} beta={result.beta:.6g} "
               f"({result.point_count} points)")


def _slab_fit(lz: float, target_states: int):
    """Fit the counting exponent of the box (1, 1, L_z) in its lowest regime.

    When one direction is much stiffer than the rest (its first
    excitation gap dwarfs the energy needed to collect the target
    number of states from the soft directions), the stiff coordinate is
    frozen in its ground state and the box counts states like a
    lower-dimensional system.  In that case energies are measured from
    the frozen zero-point and the window is capped below the first
    stiff excitation, which exposes the reduced-dimension power law.
    Otherwise the fit runs on the raw 3-D staircase.
    """
    lengths = [1.0, 1.0, lz]
    gaps = [3.0 / L**2 for L in lengths]
    gap_max = max(gaps)
    frozen = [i for i, g in enumerate(gaps) if g > 0.5 * gap_max]
    soft = [lengths[i] for i in range(3) if i not in frozen]
    d = len(soft)
    zero_point = sum(1.0 / lengths[i] ** 2 for i in frozen)
    if d > 0:
        v_soft = math.prod(soft)
        unit = (math.pi ** (d / 2.0) / (2.0**d * math.gamma(d / 2.0 + 1.0))) * v_soft
        e_target = (target_states / unit) ** (2.0 / d)
        window = min(e_target, 0.9 * gap_max)
        if unit * window**(d / 2.0) >= 50.0:
            soft_ground = sum(1.0 / L**2 for L in soft)
            e_max = zero_point + soft_ground + window
            spec = enumerate_hyperbox(lengths, e_max, normalize=False)
            st = build_staircase(spec)
            shifted = Staircase(st.energies - zero_point, st.counts)
            return fit_powerlaw(shifted)
    volume = math.prod(lengths)
    e_max = sum(1.0 / L**2 for L in lengths) + (
        6.0 * target_states / (math.pi * volume)
    ) ** (2.0 / 3.0)
    spec = enumerate_hyperbox(lengths, e_max, normalize=False)
    return fit_powerlaw(build_staircase(spec))


def _cylinder_fit(ratio: float, target_states: int):
    """Fit the counting exponent of a unit-volume cylinder with H/R = ratio.

    Same regime logic as the slab sweep: a flat cylinder freezes the
    axial mode (2-D disc counting), a long one freezes the transverse
    Bessel mode (1-D counting), and comparable scales fall back to the
    raw 3-D staircase.  Cylinder energies carry no 1/pi^2 rescaling, so
    the smooth counting terms differ from the unit-box ones by powers
    of pi.
    """
    radius = (1.0 / (math.pi * ratio)) ** (1.0 / 3.0)
    height = ratio * radius
    k01 = bessel_zero("ordinary", 0, 1)
    k11 = bessel_zero("ordinary", 1, 1)
    gap_axial = 3.0 * math.pi**2 / height**2
    gap_radial = (k11**2 - k01**2) / radius**2
    if gap_axial > 2.0 * gap_radial:
        unit = radius**2 / 4.0  # disc counting N = (A/4pi) eps
        window = min(target_states / unit, 0.9 * gap_axial)
        if unit * window >= 50.0:
            shift = math.pi**2 / height**2
            e_max = shift + k01**2 / radius**2 + window
            st = build_staircase(enumerate_cylinder(height, radius, e_max, normalize=False))
            return fit_powerlaw(Staircase(st.energies - shift, st.counts))
    elif gap_radial > 2.0 * gap_axial:
        unit = height / math.pi  # segment counting N = (H/pi) sqrt(eps)
        window = min((target_states / unit) ** 2, 0.9 * gap_radial)
        if unit * math.sqrt(window) >= 50.0:
            shift = k01**2 / radius**2
            e_max = shift + math.pi**2 / height**2 + window
            st = build_staircase(enumerate_cylinder(height, radius, e_max, normalize=False))
            return fit_powerlaw(Staircase(st.energies - shift, st.counts))
    ground = math.pi**2 / height**2 + k01**2 / radius**2
    e_max = ground + (6.0 * math.pi**2 * target_states) ** (2.0 / 3.0)
    st = build_staircase(enumerate_cylinder(height, radius, e_max, normalize=False))
    return fit_powerlaw(st)


def _parse_range(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"range must be start:stop[:log|lin], got {text!r}")
    start, stop = float(parts[0]), float(parts[1])
    log = len(parts) == 3 and parts[2] == "log"
    return start, stop, log


@cli.command()
@click.option("--geometry", type=click.Choice(("hyperbox", "cylinder")), required=True)
@click.option("--lz", type=str, default=None, help="L_z range start:stop[:log] (hyperbox).")
@click.option("--aspect", type=str, default=None, help="H/R range start:stop[:log] (cylinder).")
@click.option("--steps", type=int, default=9)
@click.option("--target-states", type=int, default=20_000)
@click.option("-o", "--output", required=True, type=click.Path())
def sweep(geometry, lz, aspect, steps, target_states, output):
    """Fit the counting exponent while one geometry parameter varies."""
    if steps < 2:
        raise ValueError("--steps must be at least 2")
    rows = []
    if geometry == "hyperbox":
        if not lz:
            raise ValueError("--lz is required for the hyperbox sweep")
        start, stop, log = _parse_range(lz)
        grid = np.geomspace(start, stop, steps) if log else np.linspace(start, stop, steps)
        for lz_val in grid:
            # Fixed L_x = L_y = 1 and raw lengths: the sweep studies the
            # aspect effect, not the unit-volume family.
            f = _slab_fit(lz_val, target_states)
            rows.append(ScalingRow("lz=%.6g" % lz_val, 1, f.alpha, f.beta,
                                   f.ln_alpha, f.residual_rms, f.point_count))
    else:
        if not aspect:
            raise ValueError("--aspect is required for the cylinder sweep")
        start, stop, log = _parse_range(aspect)
        grid = np.geomspace(start, stop, steps) if log else np.linspace(start, stop, steps)
        for ratio in grid:
            f = _cylinder_fit(ratio, target_states)
            rows.append(ScalingRow("aspect=%.6g" % ratio, 1, f.alpha, f.beta,
                                   f.ln_alpha, f.residual_rms, f.point_count))
    csvio.write_rows(output, *csvio.fit_rows(rows))
    click.echo(f"{output}: {len(rows)} sweep points")


# ---------------------------------------------------------------------------
# reproduce targets

SCALING_CUTOFF = 100.0
SCALING_N_MAX = 5
ENSEMBLE_SEEDS = 100
ENSEMBLE_LEVELS = 500
ENSEMBLE_TARGET = 2000


def _toy_spectrum() -> Spectrum:
    # Lowest nine energies {2,2,3,3,3,3,5,5,5}.
    return Spectrum((Level(2.0, 2), Level(3.0, 4), Level(5.0, 3)), 5.0)


def _write_spectrum_products(outdir, tag, spec, window, theory_counting, theory_dos):
    st = build_staircase(spec)
    csvio.write_rows(os.path.join(outdir, f"{tag}_degeneracy.csv"),
                     *csvio.degeneracy_rows(degeneracy_series(spec)))
    csvio.write_rows(os.path.join(outdir, f"{tag}_staircase.csv"), *csvio.staircase_rows(st))
    series = dos_window(spec, window, default_centers(0.0, spec.e_max, window))
    csvio.write_rows(os.path.join(outdir, f"{tag}_dos.csv"), *csvio.dos_rows(series))
    plots.save_spectrum_panels(os.path.join(outdir, f"{tag}.png"), spec, series,
                               theory_counting, theory_dos, title=tag)


def _three_boxes():
    return [
        ("cube", enumerate_hyperbox([1.0, 1.0, 1.0], 1024.0)),
        ("rectangle", enumerate_hyperbox(RECTANGLE_LENGTHS, 1024.0)),
        ("sphere", enumerate_sphere(95.0)),
    ]


def _scaling_bases():
    return [
        ("cube", enumerate_hyperbox([1.0, 1.0, 1.0], 120.0)),
        ("rectangle", enumerate_hyperbox(RECTANGLE_LENGTHS, 120.0)),
        ("sphere", enumerate_sphere(22.0)),
    ]


def scaling_rows(bases, n_values, cutoff: float = SCALING_CUTOFF) -> list[ScalingRow]:
    """Common-cutoff N-boson fits plus the closed-form theory rows."""
    rows: list[ScalingRow] = []
    for label, base in bases:
        for n in n_values:
            try:
                if n == 1:
                    f = fit_powerlaw(build_staircase(base), e_hi=cutoff)
                else:
                    spec_n = build_nboson_spectrum(base, n, min(cutoff, base.e_max))
                    f = fit_powerlaw(build_staircase(spec_n))
                rows.append(ScalingRow(label, n, f.alpha, f.beta, f.ln_alpha,
                                       f.residual_rms, f.point_count))
            except (ValueError, OverflowError):
                rows.append(ScalingRow(label, n, math.nan, math.nan, math.nan, math.nan, 0))
    for n in n_values:
        form = nboson_closed_form(0.4, 0.5, n)
        rows.append(ScalingRow("theory", n, form.alpha, form.beta,
                               math.log(form.alpha), 0.0, 0))
    return rows


def ensemble_rows(n_values, seed0: int):
    rows = []
    for n in n_values:
        stats = random_ensemble_stats(ENSEMBLE_SEEDS, ENSEMBLE_LEVELS, 0.5, n,
                                      seed0=seed0, target_states=ENSEMBLE_TARGET)
        rows.append([n, stats.mean_beta, stats.std_beta, stats.mean_ln_alpha,
                     stats.std_ln_alpha, stats.n_success])
    return rows


def _scaling_products(outdir, tag, quantity, seed0, cache):
    if "scaling" not in cache:
        cache["scaling"] = scaling_rows(_scaling_bases(), range(1, SCALING_N_MAX + 1))
    if "ensemble" not in cache:
        cache["ensemble"] = ensemble_rows(range(1, SCALING_N_MAX + 1), seed0)
    rows = list(cache["scaling"])
    ens = cache["ensemble"]
    csvio.write_rows(os.path.join(outdir, f"{tag}_scaling.csv"), *csvio.fit_rows(rows))
    csvio.write_rows(
        os.path.join(outdir, f"{tag}_ensemble.csv"),
        ["N", "mean_beta", "std_beta", "mean_ln_alpha", "std_ln_alpha", "n_success"],
        ens,
    )
    for n, mb, sb, ml, sl, _cnt in ens:
        rows.append(ScalingRow("random", n, math.exp(ml), mb, ml, 0.0, 0))
    err_idx = 1 if quantity == "beta" else 3
    std_idx = 2 if quantity == "beta" else 4
    errors = {int(r[0]): float(r[std_idx]) for r in ens}
    plots.save_scaling_trend(os.path.join(outdir, f"{tag}.png"), rows, quantity, errors)


def run_reproduce(targets, outdir: str, seed: int) -> None:
    os.makedirs(outdir, exist_ok=True)
    cache: dict = {}
    quarter = math.pi / 4.0
    sixth = math.pi / 6.0
    for target in targets:
        if target == "fig1":
            rows = [[nx, ny, nx * nx + ny * ny]
                    for nx in range(1, 11) for ny in range(1, 11)]
            csvio.write_rows(os.path.join(outdir, "fig1_nspace.csv"),
                             ["nx", "ny", "energy"], rows)
            plots.save_nspace_grid(os.path.join(outdir, "fig1.png"))
        elif target == "fig2":
            toy = _toy_spectrum()
            lifted = split_degeneracies(toy, 0.1)
            for tag, spec in (("fig2_degenerate", toy), ("fig2_lifted", lifted)):
                csvio.write_rows(os.path.join(outdir, f"{tag}_degeneracy.csv"),
                                 *csvio.degeneracy_rows(degeneracy_series(spec)))
                csvio.write_rows(os.path.join(outdir, f"{tag}_staircase.csv"),
                                 *csvio.staircase_rows(build_staircase(spec)))
            plots.save_degeneracy_pair(os.path.join(outdir, "fig2.png"), toy, lifted)
        elif target == "fig3":
            spec = enumerate_hyperbox([1.0, 1.0], 100.0)
            _write_spectrum_products(outdir, "fig3", spec, 10.0,
                                     lambda e: quarter * e, lambda e: quarter * np.ones_like(e))
        elif target == "fig4":
            spec = enumerate_hyperbox([1.0, 1.0], 1600.0)
            _write_spectrum_products(outdir, "fig4", spec, 60.0,
                                     lambda e: quarter * e, lambda e: quarter * np.ones_like(e))
        elif target == "fig5":
            spec = enumerate_hyperbox([1.0, 1.0, 1.0], 100.0)
            _write_spectrum_products(outdir, "fig5", spec, 10.0,
                                     lambda e: sixth * e**1.5, lambda e: quarter * np.sqrt(e))
        elif target == "fig6":
            spec = enumerate_hyperbox([1.0, 1.0, 1.0], 1024.0)
            _write_spectrum_products(outdir, "fig6", spec, 50.0,
                                     lambda e: sixth * e**1.5, lambda e: quarter * np.sqrt(e))
        elif target in ("fig7", "fig8"):
            if "boxes" not in cache:
                cache["boxes"] = [(lbl, s, build_staircase(s)) for lbl, s in _three_boxes()]
            for lbl, spec, st in cache["boxes"]:
                csvio.write_rows(os.path.join(outdir, f"{target}_staircase_{lbl}.csv"),
                                 *csvio.staircase_rows(st))
            if target == "fig7":
                plots.save_counting_comparison(
                    os.path.join(outdir, "fig7.png"),
                    [(lbl, st, spec.expand()) for lbl, spec, st in cache["boxes"]],
                    bin_width=40.0,
                )
            else:
                plots.save_loglog_counting(
                    os.path.join(outdir, "fig8.png"),
                    [(lbl, st) for lbl, _spec, st in cache["boxes"]],
                )
        elif target == "fig9":
            sphere = enumerate_sphere(22.0)
            stairs = []
            for n in range(1, SCALING_N_MAX + 1):
                spec_n = sphere if n == 1 else build_nboson_spectrum(
                    sphere, n, min(SCALING_CUTOFF, sphere.e_max))
                st = build_staircase(spec_n)
                csvio.write_rows(os.path.join(outdir, f"fig9_staircase_n{n}.csv"),
                                 *csvio.staircase_rows(st))
                stairs.append((f"N={n}", st))
            plots.save_loglog_counting(os.path.join(outdir, "fig9.png"), stairs,
                                       title="bosons on the sphere spectrum")
        elif target == "fig10":
            _scaling_products(outdir, "fig10", "beta", seed, cache)
        elif target == "fig11":
            _scaling_products(outdir, "fig11", "ln_alpha", seed, cache)
        else:
            raise ValueError(f"unknown reproduce target {target!r} (valid: fig1..fig11)")


@cli.command()
@click.argument("targets", nargs=-1, required=True)
@click.option("--outdir", type=click.Path(), default=".", show_default=True)
@click.option("--seed", type=int, default=None)
def reproduce(targets, outdir, seed):
    """Emit the data series (CSV) and a rendered PNG for figure targets fig1..fig11."""
    run_reproduce(targets, outdir, _seed_option(seed))
    click.echo(f"{outdir}: wrote {', '.join(targets)}")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Abort:
        return 2
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except ValueError as exc:
        click.echo(f"validation error: {exc}", err=True)
        return 3
    except Exception as exc:  # computational failure
        click.echo(f"computation failed: {exc}", err=True)
        return 4


if __name__ == "__main__":
    sys.exit(main())
