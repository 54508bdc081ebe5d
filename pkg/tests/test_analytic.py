import math

import numpy as np
import pytest
from scipy import integrate

from boxdos.analytic import (
    GridTooCoarseError,
    PowerLawDos,
    SampledDos,
    beta_integral,
    convolve_dos,
    nboson_closed_form,
    sphere_volume,
    weyl_counting,
    weyl_dos,
)

ENERGIES = [0.5, 1.0, 4.0, 64.0, 1000.0]


class TestWeyl:
    # Closed forms for the smooth counting function and DOS of a unit
    # box in D dimensions, derived by hand from the D-sphere volume.
    COUNTING = {
        1: lambda e: math.sqrt(e),
        2: lambda e: math.pi * e / 4,
        3: lambda e: math.pi * e**1.5 / 6,
        4: lambda e: math.pi**2 * e**2 / 32,
        5: lambda e: math.pi**2 * e**2.5 / 60,
        6: lambda e: math.pi**3 * e**3 / 384,
    }
    DOS = {
        1: lambda e: 0.5 / math.sqrt(e),
        2: lambda e: math.pi / 4,
        3: lambda e: math.pi * math.sqrt(e) / 4,
        4: lambda e: math.pi**2 * e / 16,
        5: lambda e: math.pi**2 * e**1.5 / 24,
        6: lambda e: math.pi**3 * e**2 / 128,
    }

    def test_counting_closed_forms(self):
        for d, f in self.COUNTING.items():
            for e in ENERGIES:
                assert weyl_counting(d, e) == pytest.approx(f(e), rel=1e-12)

    def test_dos_closed_forms(self):
        for d, f in self.DOS.items():
            for e in ENERGIES:
                assert weyl_dos(d, e) == pytest.approx(f(e), rel=1e-12)

    def test_dos_is_derivative_of_counting(self):
        for d in range(1, 7):
            for e in ENERGIES:
                h = 1e-6 * e
                num = (weyl_counting(d, e + h) - weyl_counting(d, e - h)) / (2 * h)
                assert weyl_dos(d, e) == pytest.approx(num, rel=1e-7)

    def test_sphere_volume(self):
        assert sphere_volume(2, 1.0) == pytest.approx(math.pi, rel=1e-14)
        assert sphere_volume(3, 2.0) == pytest.approx(4 / 3 * math.pi * 8, rel=1e-14)
        assert sphere_volume(4, 1.0) == pytest.approx(math.pi**2 / 2, rel=1e-14)


class TestBetaIntegral:
    HALF_INTEGERS = [x / 2 for x in range(-1, 9)]  # -1/2 .. 4

    def test_against_adaptive_quadrature(self):
        # Oracle: quadpack with algebraic endpoint weights, which handles
        # the integrable singularities at both limits.
        for n in self.HALF_INTEGERS:
            for m in self.HALF_INTEGERS:
                for e_val in (0.5, 1.0, 2.0, 10.0):
                    ref, _ = integrate.quad(
                        lambda t: 1.0, 0.0, e_val, weight="alg", wvar=(n, m), limit=200
                    )
                    assert beta_integral(n, m, e_val) == pytest.approx(ref, rel=1e-10)

    def test_symmetry(self):
        assert beta_integral(0.5, 2.0, 3.0) == pytest.approx(
            beta_integral(2.0, 0.5, 3.0), rel=1e-14
        )

    def test_energy_scaling(self):
        # The integral scales as E^(n+m+1).
        v1 = beta_integral(0.5, 1.5, 1.0)
        v2 = beta_integral(0.5, 1.5, 4.0)
        assert v2 / v1 == pytest.approx(4.0**3, rel=1e-12)


class TestClosedForm:
    def test_two_particle_coefficients(self):
        # g2 = b!^2 a^2 / (2b+1)! E^(2b+1) for each table column, a=1.
        cases = {
            -0.5: math.pi,  # (-1/2)!^2 / 0! = pi
            0.0: 1.0,
            0.5: math.pi / 8,  # (1/2)!^2 / 2! = pi/8
            1.0: 1.0 / 6.0,
        }
        for b, coeff in cases.items():
            form = nboson_closed_form(1.0, b, 2)
            assert form.coefficient == pytest.approx(coeff, rel=1e-12)
            assert form.exponent == pytest.approx(2 * b + 1, rel=1e-14)

    def test_seven_particle_half_coefficient(self):
        # b = 1/2, N = 7: (1/2)!^7 / (19/2)! = 8 pi^3 / 654729075.
        form = nboson_closed_form(1.0, 0.5, 7)
        assert form.coefficient == pytest.approx(8 * math.pi**3 / 654729075, rel=1e-12)
        assert form.exponent == pytest.approx(9.5, rel=1e-14)

    def test_general_n_rows(self):
        from boxdos.specfun import half_integer_factorial as hf

        for b in (-0.5, 0.0, 0.5, 1.0):
            for n in range(1, 9):
                form = nboson_closed_form(1.0, b, n)
                expected = hf(b) ** n / hf(n * b + n - 1)
                assert form.coefficient == pytest.approx(expected, rel=1e-12)
                assert form.exponent == pytest.approx(n * b + n - 1, rel=1e-14)

    def test_alpha_beta_relation(self):
        # Counting exponent beta = N(b+1) and alpha = coeff a^N / beta.
        form = nboson_closed_form(0.4, 0.5, 3)
        assert form.beta == pytest.approx(4.5, rel=1e-14)
        assert form.alpha == pytest.approx(form.coefficient / 4.5, rel=1e-12)
        assert form.counting(2.0) == pytest.approx(form.alpha * 2.0**4.5, rel=1e-12)
        assert form.dos(2.0) == pytest.approx(form.coefficient * 2.0**3.5, rel=1e-12)

    def test_amplitude_enters_as_a_to_the_n(self):
        f1 = nboson_closed_form(1.0, 0.5, 4)
        f2 = nboson_closed_form(2.0, 0.5, 4)
        assert f2.coefficient / f1.coefficient == pytest.approx(16.0, rel=1e-12)
        assert f2.alpha / f1.alpha == pytest.approx(16.0, rel=1e-12)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            nboson_closed_form(1.0, -1.5, 2)
        with pytest.raises(ValueError):
            nboson_closed_form(1.0, 0.5, 0)


class TestConvolution:
    @pytest.mark.parametrize("b", [-0.5, 0.0, 0.5, 1.0])
    def test_closure_against_closed_form(self, b):
        # Convolving g1 = E^b with itself N-1 times must land on the
        # closed form; iterate numerically and compare at each order.
        grid = np.geomspace(0.05, 20.0, 60)
        g1 = PowerLawDos(1.0, b)
        g = g1
        for n in range(2, 7):
            g = convolve_dos(g, g1, grid)
            form = nboson_closed_form(1.0, b, n)
            expected = form.coefficient * grid**form.exponent
            assert np.max(np.abs(g.values - expected) / expected) < 1e-6

    def test_self_check_flags_coarse_grid(self):
        grid = np.geomspace(0.1, 10.0, 30)
        g1 = PowerLawDos(1.0, 0.5)
        with pytest.raises(GridTooCoarseError):
            convolve_dos(g1, g1, grid, order=4)

    def test_dimensional_equivalence(self):
        # One particle in 6-D counts like three 2-D bosons double
        # counted: convolving the flat 2-D DOS twice gives the 6-D
        # energy power E^2 up to the multiset normalization.
        grid = np.geomspace(0.1, 10.0, 50)
        g1 = PowerLawDos(math.pi / 4, 0.0)
        g = convolve_dos(convolve_dos(g1, g1, grid), g1, grid)
        form = nboson_closed_form(math.pi / 4, 0.0, 3)
        expected = form.coefficient * grid**2
        assert np.allclose(g.values, expected, rtol=1e-8)


class TestSampledDos:
    def test_loglog_interpolation_is_exact_on_power_laws(self):
        grid = np.geomspace(0.1, 100.0, 40)
        s = SampledDos(grid, 2.5 * grid**1.7, zero_exponent=1.7)
        probe = np.array([0.37, 3.1, 55.0])
        assert np.allclose(s(probe), 2.5 * probe**1.7, rtol=1e-12)

    def test_left_extrapolation(self):
        grid = np.geomspace(1.0, 10.0, 20)
        s = SampledDos(grid, grid**2, zero_exponent=2.0)
        assert s(0.5) == pytest.approx(0.25, rel=1e-9)

    def test_powerlaw_dos_validation(self):
        with pytest.raises(ValueError):
            PowerLawDos(-1.0, 0.5)
