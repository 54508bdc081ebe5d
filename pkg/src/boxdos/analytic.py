"""Closed-form counting functions and the N-boson density model.

Contains the D-dimensional smooth counting function and DOS for a rigid
box (the positive 2^-D sector of a hypersphere in quantum-number space),
the power-law convolution integral, the numerical density convolution,
and the closed forms for N identical bosons on a single-particle density
g_1(E) = a E^b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import half_integer_factorial

__all__ = [
    "PowerLawDos",
    "SampledDos",
    "NBosonClosedForm",
    "weyl_counting",
    "weyl_dos",
    "sphere_volume",
    "beta_integral",
    "convolve_dos",
    "nboson_closed_form",
    "GridTooCoarseError",
]


class GridTooCoarseError(RuntimeError):
    """Convolution quadrature failed its self-consistency check."""


def _gamma1p(x: float) -> float:
    """Gamma(x + 1), via the exact half-integer product when applicable."""
    if abs(2 * x - round(2 * x)) < 1e-9 and 2 * x >= -1:
        return half_integer_factorial(round(2 * x) / 2.0)
    return math.gamma(x + 1.0)


@dataclass(frozen=True)
class PowerLawDos:
    """A pure power-law density of states: amplitude * E^exponent."""

    amplitude: float
    exponent: float

    def __post_init__(self):
        if self.amplitude <= 0:
            raise ValueError(f"amplitude must be positive, got {self.amplitude}")
        if self.exponent <= -1:
            raise ValueError(f"exponent must exceed -1, got {self.exponent}")

    def __call__(self, energy):
        return self.amplitude * np.asarray(energy, dtype=float) ** self.exponent

    @property
    def zero_exponent(self) -> float:
        return self.exponent


@dataclass(frozen=True)
class SampledDos:
    """A density sampled on a positive energy grid.

    Evaluation interpolates linearly in log-log space (exact for power
    laws); below the grid it extrapolates with the known small-energy
    exponent.
    """

    energies: np.ndarray
    values: np.ndarray
    zero_exponent: float

    def __call__(self, energy):
        e = np.asarray(energy, dtype=float)
        log_e = np.log(self.energies)
        log_v = np.log(self.values)
        out = np.empty_like(e, dtype=float)
        scalar = out.ndim == 0
        e = np.atleast_1d(e)
        out = np.atleast_1d(out)
        below = e < self.energies[0]
        inside = ~below
        out[inside] = np.exp(np.interp(np.log(e[inside]), log_e, log_v))
        if below.any():
            anchor_e, anchor_v = self.energies[0], self.values[0]
            out[below] = anchor_v * (e[below] / anchor_e) ** self.zero_exponent
        return float(out[0]) if scalar else out


def weyl_counting(ndim: int, energy: float) -> float:
    """Smooth cumulative state count for a rigid box in `ndim` dimensions.

    (1/2^D) * pi^(D/2) / Gamma(D/2 + 1) * eps^(D/2), energies in units of
    the lowest single-particle energy.
    """
    if ndim < 1:
        raise ValueError(f"dimension must be >= 1, got {ndim}")
    if energy < 0:
        raise ValueError(f"energy must be >= 0, got {energy}")
    half = ndim / 2.0
    return math.pi**half / (2.0**ndim * _gamma1p(half)) * energy**half


def weyl_dos(ndim: int, energy: float) -> float:
    """Derivative of weyl_counting with respect to energy."""
    if ndim < 1:
        raise ValueError(f"dimension must be >= 1, got {ndim}")
    if energy < 0:
        raise ValueError(f"energy must be >= 0, got {energy}")
    half = ndim / 2.0
    return half * math.pi**half / (2.0**ndim * _gamma1p(half)) * energy ** (half - 1.0)


def sphere_volume(ndim: int, radius: float) -> float:
    """Volume of a sphere of the given radius in `ndim` dimensions."""
    if ndim < 1:
        raise ValueError(f"dimension must be >= 1, got {ndim}")
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    return math.pi ** (ndim / 2.0) / _gamma1p(ndim / 2.0) * radius**ndim


def beta_integral(n: float, m: float, energy: float) -> float:
    """integral_0^E (E')^n (E - E')^m dE' = n! m! / (n+m+1)! * E^(n+m+1).

    Extended to half-integer n, m via the Gamma function; both exponents
    must exceed -1 for convergence.
    """
    if n <= -1 or m <= -1:
        raise ValueError(f"exponents must exceed -1, got n={n}, m={m}")
    if energy < 0:
        raise ValueError(f"energy must be >= 0, got {energy}")
    return _gamma1p(n) * _gamma1p(m) / _gamma1p(n + m + 1.0) * energy ** (n + m + 1.0)


def _gauss_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    # Legendre nodes mapped to theta in (0, pi/2); avoids evaluating the
    # integrand at the (possibly singular) endpoints.
    x, w = np.polynomial.legendre.leggauss(order)
    theta = (x + 1.0) * (math.pi / 4.0)
    return theta, w * (math.pi / 4.0)


def convolve_dos(g_prev, g_one, e_grid, *, order: int = 96, check: bool = True) -> SampledDos:
    """Numerical convolution g(E) = integral_0^E g_prev(E') g_one(E - E') dE'.

    Uses the substitution E' = E sin^2(theta), which removes the endpoint
    power singularities, followed by Gauss-Legendre quadrature in theta.
    With check=True the integral is recomputed at half the quadrature
    order and a relative drift above 1e-6 raises GridTooCoarseError.
    """
    e_grid = np.asarray(e_grid, dtype=float)
    if np.any(e_grid <= 0):
        raise ValueError("energy grid must be strictly positive")
    if np.any(np.diff(e_grid) <= 0):
        raise ValueError("energy grid must be strictly increasing")

    def integrate(n_nodes: int) -> np.ndarray:
        theta, w = _gauss_nodes(n_nodes)
        s2 = np.sin(theta) ** 2
        c2 = np.cos(theta) ** 2
        jac = 2.0 * np.sin(theta) * np.cos(theta)
        out = np.empty_like(e_grid)
        for i, e in enumerate(e_grid):
            out[i] = e * np.sum(w * jac * g_prev(e * s2) * g_one(e * c2))
        return out

    values = integrate(order)
    if check:
        coarse = integrate(order // 2)
        drift = np.max(np.abs(coarse - values) / np.maximum(np.abs(values), 1e-300))
        if drift > 1e-6:
            raise GridTooCoarseError(
                f"quadrature self-consistency drift {drift:.2e} exceeds 1e-6; "
                "increase the order"
            )
    zero_exp = getattr(g_prev, "zero_exponent", 0.0) + getattr(g_one, "zero_exponent", 0.0) + 1.0
    return SampledDos(e_grid, values, zero_exp)


@dataclass(frozen=True)
class NBosonClosedForm:
    """g_N(E) = coefficient * E^exponent and its cumulative alpha * E^beta."""

    n_particles: int
    coefficient: float
    exponent: float
    alpha: float
    beta: float

    def dos(self, energy):
        return self.coefficient * np.asarray(energy, dtype=float) ** self.exponent

    def counting(self, energy):
        return self.alpha * np.asarray(energy, dtype=float) ** self.beta


def nboson_closed_form(a: float, b: float, n_particles: int) -> NBosonClosedForm:
    """Closed form for N bosons on a single-particle density g_1 = a E^b.

    g_N(E) = b!^N a^N / (Nb + N - 1)! * E^(Nb + N - 1) and the cumulative
    count has exponent beta = N(b + 1).  Obtained by iterating the
    density convolution, which double-counts configurations reachable by
    adding the last particle in more than one order; that naive model is
    reproduced here unchanged.
    """
    if n_particles < 1:
        raise ValueError(f"particle number must be >= 1, got {n_particles}")
    if b <= -1:
        raise ValueError(f"exponent must exceed -1, got {b}")
    if a <= 0:
        raise ValueError(f"amplitude must be positive, got {a}")
    nn = n_particles
    try:
        numerator = _gamma1p(b) ** nn * a**nn
        coefficient = numerator / _gamma1p(nn * b + nn - 1.0)
        alpha = numerator / _gamma1p(nn * b + nn)
    except OverflowError:
        raise OverflowError(
            f"closed form overflows for N={nn}, b={b}; the Gamma factors are too large"
        ) from None
    if math.isinf(coefficient) or math.isinf(alpha) or coefficient == 0.0:
        raise OverflowError(f"closed form overflows for N={nn}, b={b}")
    return NBosonClosedForm(nn, coefficient, nn * b + nn - 1.0, alpha, nn * b + nn)
