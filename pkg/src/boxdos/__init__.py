"""boxdos: density-of-states toolkit for quantum particles in rigid boxes.

Enumerates exact single-particle spectra (hyperboxes, sphere, cylinder,
relativistic square), derives degeneracy, cumulative state number, and
windowed DOS, builds N-identical-boson spectra on top of them, and
compares everything with closed-form counting functions and power-law
fits.
"""

from .analytic import (
    NBosonClosedForm,
    PowerLawDos,
    SampledDos,
    beta_integral,
    convolve_dos,
    nboson_closed_form,
    sphere_volume,
    weyl_counting,
    weyl_dos,
)
from .fitlab import (
    EnsembleStats,
    PowerLawFit,
    fit_powerlaw,
    random_ensemble_stats,
    scaling_report,
)
from .manybody import build_nboson_spectrum, nboson_configurations
from .specfun import bessel_zero, half_integer_factorial
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
    DosSeries,
    Staircase,
    build_staircase,
    cumulative_count,
    degeneracy_series,
    dos_series,
    dos_window,
    split_degeneracies,
)

__version__ = "0.1.0"
