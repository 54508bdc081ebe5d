"""Single-particle spectra for rigid boxes of several geometries.

Energies are in reduced units: hbar^2 pi^2 / (2M) = 1 for the
rectangular family and the sphere (where the energy is written in terms
of the spherical Bessel zeros), hbar^2 / (2M) = 1 for the cylinder, and
pi*hbar*c / L = 1 for the relativistic square.  By default every
geometry is rescaled to unit volume so their counting functions share a
common scale.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .specfun import bessel_zero

__all__ = [
    "Level",
    "Spectrum",
    "enumerate_hyperbox",
    "enumerate_sphere",
    "enumerate_cylinder",
    "enumerate_relativistic_square",
    "random_power_spectrum",
    "merge_levels",
]

# Distinct physical levels in the geometries handled here are separated
# by far more than this; it only has to absorb float round-off in the
# energy sums.
MERGE_RTOL = 1e-12


@dataclass(frozen=True)
class Level:
    energy: float
    degeneracy: int
    labels: tuple = ()


@dataclass(frozen=True)
class Spectrum:
    """Sorted energy levels with integer multiplicities.

    The listing is guaranteed complete for every energy <= e_max.
    """

    levels: tuple[Level, ...]
    e_max: float

    @property
    def total_states(self) -> int:
        return sum(lv.degeneracy for lv in self.levels)

    @property
    def energies(self) -> np.ndarray:
        return np.array([lv.energy for lv in self.levels], dtype=float)

    @property
    def degeneracies(self) -> np.ndarray:
        return np.array([lv.degeneracy for lv in self.levels], dtype=int)

    def expand(self) -> np.ndarray:
        """Individual state energies, one entry per state, sorted."""
        return np.repeat(self.energies, self.degeneracies)

    def __len__(self) -> int:
        return len(self.levels)


def merge_levels(entries, e_max: float, *, exact: bool = False) -> Spectrum:
    """Collapse (energy, degeneracy, labels) entries into a Spectrum.

    With exact=True energies are compared as exact numbers (integer
    lattices); otherwise entries within MERGE_RTOL relative are merged.
    """
    entries = sorted(entries, key=lambda t: t[0])
    levels: list[Level] = []
    for energy, deg, labels in entries:
        if levels:
            prev = levels[-1]
            close = (
                energy == prev.energy
                if exact
                else energy - prev.energy <= MERGE_RTOL * max(1.0, abs(energy))
            )
            if close:
                levels[-1] = Level(prev.energy, prev.degeneracy + deg, prev.labels + labels)
                continue
        levels.append(Level(float(energy), deg, labels))
    return Spectrum(tuple(levels), float(e_max))


def _validated_lengths(lengths, normalize: bool) -> list[float]:
    lengths = [float(x) for x in lengths]
    if not lengths:
        raise ValueError("at least one box length is required")
    if any(x <= 0 for x in lengths):
        raise ValueError(f"box lengths must be positive, got {lengths}")
    if normalize:
        volume = math.prod(lengths)
        scale = volume ** (-1.0 / len(lengths))
        lengths = [x * scale for x in lengths]
    return lengths


def enumerate_hyperbox(
    lengths,
    e_max: float,
    *,
    normalize: bool = True,
    with_labels: bool = False,
) -> Spectrum:
    """All levels eps = sum (n_i / L_i)^2 <= e_max for a D-dimensional rigid box.

    Completeness comes from the nested bound n_i <= L_i * sqrt(remaining
    energy budget).  When every side length is 1 the energies are exact
    integers and degeneracies are merged exactly.
    """
    lengths = _validated_lengths(lengths, normalize)
    e_max = float(e_max)
    if e_max <= 0:
        raise ValueError(f"e_max must be positive, got {e_max}")

    integer_lattice = all(abs(x - 1.0) < 1e-12 for x in lengths)
    inv_sq = [1.0 / (x * x) for x in lengths]
    ndim = len(lengths)

    entries: list[tuple[float, int, tuple]] = []
    tuple_buf = [0] * ndim

    def descend(axis: int, acc: float, budget: float) -> None:
        w = 1.0 if integer_lattice else inv_sq[axis]
        n_cap = int(math.floor(math.sqrt(budget / w) * (1.0 + 1e-13))) if budget > 0 else 0
        last = axis == ndim - 1
        for n in range(1, n_cap + 1):
            term = float(n * n) * w
            rest = budget - term
            if rest < -1e-9 * max(1.0, e_max):
                break
            tuple_buf[axis] = n
            if last:
                energy = acc + term
                if energy <= e_max * (1.0 + 1e-13):
                    labels = (tuple(tuple_buf),) if with_labels else ()
                    entries.append((min(energy, e_max) if energy > e_max else energy, 1, labels))
            else:
                descend(axis + 1, acc + term, rest)

    descend(0, 0.0, e_max)
    if not entries:
        warnings.warn(f"e_max={e_max} lies below the ground state; spectrum is empty")
    if integer_lattice:
        entries = [(float(round(e)), d, lab) for e, d, lab in entries]
    return merge_levels(entries, e_max, exact=integer_lattice)


def enumerate_sphere(k_max: float, *, with_labels: bool = True) -> Spectrum:
    """All levels of the rigid sphere with spherical Bessel zero k_ln <= k_max.

    Under unit-volume normalization R = (3/(4 pi))^(1/3) and the level
    energy is k_ln^2 / (3 pi^2 / 4)^(2/3), with degeneracy 2l + 1.
    Completeness: the first zero of j_l increases with l, so the l scan
    stops once it passes k_max.
    """
    k_max = float(k_max)
    if k_max <= math.pi:
        raise ValueError(f"k_max must exceed pi, got {k_max}")

    scale = (3.0 * math.pi**2 / 4.0) ** (2.0 / 3.0)
    entries: list[tuple[float, int, tuple]] = []
    order = 0
    while True:
        k = bessel_zero("spherical", order, 1)
        if k > k_max:
            break
        index = 1
        while k <= k_max:
            labels = ((order, index),) if with_labels else ()
            entries.append((k * k / scale, 2 * order + 1, labels))
            index += 1
            k = bessel_zero("spherical", order, index)
        order += 1
    return merge_levels(entries, k_max * k_max / scale)


def enumerate_cylinder(
    height: float,
    radius: float,
    e_max: float,
    *,
    normalize: bool = True,
) -> Spectrum:
    """Rigid cylinder levels eps = q^2 pi^2 / H^2 + K_ln^2 / R^2 below e_max.

    K_ln is the n-th zero of the ordinary Bessel function J_l.  Azimuthal
    degeneracy is 2 for l >= 1 (the +/-l pair) and 1 for l = 0; the
    underlying energy formula does not fix this, it is the standard
    physical count.
    """
    if height <= 0 or radius <= 0:
        raise ValueError(f"height and radius must be positive, got {height}, {radius}")
    e_max = float(e_max)
    if e_max <= 0:
        raise ValueError(f"e_max must be positive, got {e_max}")
    if normalize:
        s = (math.pi * radius * radius * height) ** (-1.0 / 3.0)
        height *= s
        radius *= s

    axial0 = math.pi * math.pi / (height * height)
    entries: list[tuple[float, int, tuple]] = []
    order = 0
    while True:
        k1 = bessel_zero("ordinary", order, 1)
        if k1 * k1 / (radius * radius) + axial0 > e_max:
            break
        deg = 1 if order == 0 else 2
        index = 1
        while True:
            k = bessel_zero("ordinary", order, index)
            radial = k * k / (radius * radius)
            if radial + axial0 > e_max:
                break
            q = 1
            while radial + q * q * axial0 <= e_max:
                entries.append((radial + q * q * axial0, deg, ((q, order, index),)))
                q += 1
            index += 1
        order += 1
    return merge_levels(entries, e_max)


def enumerate_relativistic_square(e_max: float, *, with_labels: bool = False) -> Spectrum:
    """2-D square box with linear dispersion: eps = sqrt(nx^2 + ny^2).

    Energies are in units of pi*hbar*c/L.  Degeneracies are merged on the
    exact integer nx^2 + ny^2.
    """
    e_max = float(e_max)
    if e_max <= 0:
        raise ValueError(f"e_max must be positive, got {e_max}")
    r2_max = int(math.floor(e_max * e_max * (1.0 + 1e-13)))
    counts: dict[int, list] = {}
    nx = 1
    while nx * nx < r2_max:
        ny = 1
        while nx * nx + ny * ny <= r2_max:
            r2 = nx * nx + ny * ny
            slot = counts.setdefault(r2, [0, ()])
            slot[0] += 1
            if with_labels:
                slot[1] = slot[1] + ((nx, ny),)
            ny += 1
        nx += 1
    entries = [(math.sqrt(r2), d, lab) for r2, (d, lab) in counts.items()]
    entries = [(e, d, lab) for e, d, lab in entries if e <= e_max]
    return merge_levels(entries, e_max)


def random_power_spectrum(
    count: int,
    b: float,
    seed: int,
    *,
    amplitude: float = math.pi / 4.0,
) -> Spectrum:
    """A random spectrum whose density of states is amplitude * eps^b.

    Draws `count` uniform variates on [0, 1], sorts them, and applies
    y = [(b+1) count / amplitude]^(1/(b+1)) x^(1/(b+1)); for b = 1/2 and
    amplitude pi/4 the scale factor is ((6/pi) count)^(2/3).  All
    degeneracies are 1 and the output is reproducible for a fixed seed.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if b <= -1:
        raise ValueError(f"exponent must exceed -1 for a normalizable density, got {b}")
    if amplitude <= 0:
        raise ValueError(f"amplitude must be positive, got {amplitude}")

    rng = np.random.default_rng(seed)
    x = np.sort(rng.random(count))
    p = 1.0 / (b + 1.0)
    scale_factor = ((b + 1.0) * count / amplitude) ** p
    y = scale_factor * x**p
    entries = [(float(e), 1, ()) for e in y]
    return merge_levels(entries, float(y[-1]))
