"""Delimited output formats.

All writers are atomic (temp file + rename) and print floats with 12
significant digits so repeated runs are byte-identical.
"""

from __future__ import annotations

import os
import tempfile

from .fitlab import ScalingRow
from .spectra import Level, Spectrum
from .staircase import DosSeries, Staircase

__all__ = [
    "format_number",
    "write_rows",
    "spectrum_rows",
    "read_spectrum_csv",
    "staircase_rows",
    "read_staircase_csv",
    "dos_rows",
    "degeneracy_rows",
    "fit_rows",
    "config_rows",
]


def format_number(x) -> str:
    if isinstance(x, (str, int)):
        return str(x)
    return f"{x:.12g}"


def write_rows(path: str, header: list[str], rows) -> None:
    """Write CSV atomically: build the file next to `path`, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(format_number(x) for x in row) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _format_labels(labels: tuple) -> str:
    return ";".join("|".join(str(q) for q in lab) for lab in labels)


def spectrum_rows(spectrum: Spectrum, *, with_labels: bool = False):
    header = ["energy", "degeneracy"] + (["labels"] if with_labels else [])
    rows = []
    for lv in spectrum.levels:
        row = [lv.energy, lv.degeneracy]
        if with_labels:
            row.append(_format_labels(lv.labels))
        rows.append(row)
    return header, rows


def read_spectrum_csv(path: str) -> Spectrum:
    levels = []
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        if header[:2] != ["energy", "degeneracy"]:
            raise ValueError(f"{path}: expected an energy,degeneracy spectrum file")
        for line in fh:
            parts = line.strip().split(",")
            if not parts or parts == [""]:
                continue
            levels.append(Level(float(parts[0]), int(parts[1])))
    if not levels:
        raise ValueError(f"{path}: no levels")
    return Spectrum(tuple(levels), levels[-1].energy)


def staircase_rows(staircase: Staircase):
    return ["energy", "N"], [
        [float(e), int(c)] for e, c in zip(staircase.energies, staircase.counts)
    ]


def read_staircase_csv(path: str) -> Staircase:
    import numpy as np

    energies, counts = [], []
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        if header != ["energy", "N"]:
            raise ValueError(f"{path}: expected an energy,N staircase file")
        for line in fh:
            parts = line.strip().split(",")
            if not parts or parts == [""]:
                continue
            energies.append(float(parts[0]))
            counts.append(int(parts[1]))
    return Staircase(np.array(energies), np.array(counts))


def dos_rows(series: DosSeries):
    return ["center", "g"], [[float(c), float(g)] for c, g in zip(series.centers, series.values)]


def degeneracy_rows(pairs):
    return ["energy", "degeneracy"], [[float(e), int(d)] for e, d in pairs]


def fit_rows(rows: list[ScalingRow]):
    header = ["label", "N", "alpha", "beta", "ln_alpha", "residual_rms", "points"]
    out = []
    for r in rows:
        out.append([r.label, r.n_particles, r.alpha, r.beta, r.ln_alpha,
                    r.residual_rms, r.point_count])
    return header, out


def config_rows(configs):
    return ["indices", "energy"], [
        ["|".join(str(i) for i in idx), float(e)] for idx, e in configs
    ]
