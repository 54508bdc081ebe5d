"""Exact spectra of N non-interacting identical bosons.

A boson configuration is a multiset of single-particle states, stored as
a nondecreasing index tuple so each physical state is generated exactly
once.  The builder walks these tuples depth-first and prunes a partial
configuration as soon as even the cheapest completion (all remaining
particles in the current state) would exceed the energy cutoff.
"""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from .spectra import Spectrum, merge_levels

__all__ = ["build_nboson_spectrum", "nboson_configurations"]


def _expanded_states(single: Spectrum, e_max: float) -> list[float]:
    states = [e for e in single.expand() if e <= e_max]
    if all(float(e).is_integer() for e in states):
        return [int(e) for e in states]
    return [float(e) for e in states]


def _check_inputs(single: Spectrum, n_particles: int, e_max: float) -> None:
    if n_particles < 1:
        raise ValueError(f"particle number must be >= 1, got {n_particles}")
    if e_max > single.e_max * (1.0 + 1e-12):
        raise ValueError(
            f"cutoff {e_max} exceeds the single-particle completeness bound "
            f"{single.e_max}; the N-particle listing would be incomplete"
        )


def build_nboson_spectrum(single: Spectrum, n_particles: int, e_max: float) -> Spectrum:
    """Every N-boson energy <= e_max with its exact multiset multiplicity.

    Requires the single-particle spectrum to be complete up to e_max.
    Only the (energy, multiplicity) histogram is kept, so memory scales
    with the number of distinct energies rather than configurations.
    """
    _check_inputs(single, n_particles, e_max)
    states = _expanded_states(single, e_max)
    exact = bool(states) and isinstance(states[0], int)
    histogram: dict = defaultdict(int)
    n_states = len(states)

    def extend(start: int, depth: int, energy) -> None:
        remaining = n_particles - depth
        for i in range(start, n_states):
            e_i = states[i]
            if energy + remaining * e_i > e_max:
                break
            if remaining == 1:
                histogram[energy + e_i] += 1
            else:
                extend(i, depth + 1, energy + e_i)

    extend(0, 0, 0 if exact else 0.0)
    entries = [(float(e), d, ()) for e, d in histogram.items()]
    return merge_levels(entries, e_max, exact=exact)


def nboson_configurations(
    single: Spectrum, n_particles: int, e_max: float
) -> list[tuple[tuple[int, ...], float]]:
    """Explicit (index tuple, energy) configuration dump; intended for small builds."""
    _check_inputs(single, n_particles, e_max)
    states = _expanded_states(single, e_max)
    out: list[tuple[tuple[int, ...], float]] = []
    n_states = len(states)

    def extend(start: int, prefix: tuple[int, ...], energy) -> None:
        remaining = n_particles - len(prefix)
        for i in range(start, n_states):
            e_i = states[i]
            if energy + remaining * e_i > e_max:
                break
            if remaining == 1:
                out.append((prefix + (i + 1,), float(energy + e_i)))
            else:
                extend(i, prefix + (i + 1,), energy + e_i)

    extend(0, (), 0 if states and isinstance(states[0], int) else 0.0)
    return out
