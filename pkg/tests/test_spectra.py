import itertools
import math

import numpy as np
import pytest

from boxdos.spectra import (
    Level,
    Spectrum,
    enumerate_cylinder,
    enumerate_hyperbox,
    enumerate_relativistic_square,
    enumerate_sphere,
    merge_levels,
    random_power_spectrum,
)
from boxdos.specfun import bessel_zero

RECT = (1.0, 2.0 / math.e, math.e / 2.0)


def brute_force_cube(e_max: int) -> dict[int, int]:
    """Independent O(n^3) oracle for the unit-cube degeneracies."""
    n_max = int(math.isqrt(e_max))
    hist: dict[int, int] = {}
    for nx in range(1, n_max + 1):
        for ny in range(1, n_max + 1):
            for nz in range(1, n_max + 1):
                e = nx * nx + ny * ny + nz * nz
                if e <= e_max:
                    hist[e] = hist.get(e, 0) + 1
    return hist


class TestHyperbox:
    def test_cube_census(self):
        spec = enumerate_hyperbox([1, 1, 1], 1024.0)
        assert spec.total_states == 15954
        assert len(spec) == 818
        assert spec.total_states / len(spec) == pytest.approx(19.50, abs=0.005)

    def test_cube_against_brute_force(self):
        oracle = brute_force_cube(300)
        spec = enumerate_hyperbox([1, 1, 1], 300.0)
        got = dict(zip(spec.energies.astype(int), spec.degeneracies))
        assert got == oracle

    def test_cube_degeneracy_window_933_954(self):
        # Oracle truth for the window 933..954; energies congruent to
        # 7 mod 8 cannot be written as a sum of three squares, hence the
        # gaps at 935, 943, and 951.
        oracle = brute_force_cube(954)
        expected = {933: 24, 934: 39, 936: 24, 937: 27, 938: 24, 939: 24,
                    940: 6, 941: 66, 942: 18, 944: 9, 945: 48, 946: 24,
                    947: 15, 948: 18, 949: 12, 950: 63, 952: 12, 953: 45,
                    954: 42}
        window = {e: d for e, d in oracle.items() if 933 <= e <= 954}
        assert window == expected
        for absent in (935, 943, 951):
            assert absent not in oracle

    def test_one_dimensional_box_is_squares(self):
        spec = enumerate_hyperbox([1.0], 100.0)
        assert list(spec.energies) == [n * n for n in range(1, 11)]
        assert all(d == 1 for d in spec.degeneracies)

    def test_square_lowest_levels(self):
        spec = enumerate_hyperbox([1, 1], 20.0)
        got = list(zip(spec.energies.astype(int), spec.degeneracies))
        assert got == [(2, 1), (5, 2), (8, 1), (10, 2), (13, 2), (17, 2), (18, 1), (20, 2)]

    def test_square_degeneracy_at_65(self):
        spec = enumerate_hyperbox([1, 1], 65.0)
        d = dict(zip(spec.energies.astype(int), spec.degeneracies))
        assert d[65] == 4  # (1,8),(8,1),(4,7),(7,4)

    def test_rectangle_lowest_level(self):
        spec = enumerate_hyperbox(RECT, 10.0)
        # Incommensurate sides, unit volume: ground state
        # 1 + e^2/4 + 4/e^2 at n = (1,1,1).
        assert spec.energies[0] == pytest.approx(1 + math.e**2 / 4 + 4 / math.e**2, rel=1e-12)
        assert spec.degeneracies[0] == 1

    def test_rectangle_levels_are_distinct(self):
        spec = enumerate_hyperbox(RECT, 200.0)
        assert all(d == 1 for d in spec.degeneracies)
        gaps = np.diff(spec.energies)
        assert gaps.min() > 1e-9

    def test_normalization_preserves_unit_volume_energies(self):
        # Scaling all sides by a constant must give the same normalized
        # spectrum, since only the shape matters at unit volume.
        a = enumerate_hyperbox(RECT, 150.0)
        b = enumerate_hyperbox([3.7 * L for L in RECT], 150.0)
        np.testing.assert_allclose(a.energies, b.energies, rtol=1e-10)

    def test_prefix_stability(self):
        # Raising the cutoff must not change the levels below the old one.
        small = enumerate_hyperbox(RECT, 60.0)
        large = enumerate_hyperbox(RECT, 120.0)
        n = len(small)
        np.testing.assert_allclose(large.energies[:n], small.energies, rtol=1e-12)
        assert list(large.degeneracies[:n]) == list(small.degeneracies)

    def test_four_dimensional_box(self):
        spec = enumerate_hyperbox([1, 1, 1, 1], 30.0)
        oracle: dict[int, int] = {}
        for tup in itertools.product(range(1, 6), repeat=4):
            e = sum(n * n for n in tup)
            if e <= 30:
                oracle[e] = oracle.get(e, 0) + 1
        got = dict(zip(spec.energies.astype(int), spec.degeneracies))
        assert got == oracle

    def test_empty_cutoff_warns(self):
        with pytest.warns(UserWarning):
            spec = enumerate_hyperbox([1, 1, 1], 2.0)
        assert len(spec) == 0

    def test_invalid_lengths(self):
        with pytest.raises(ValueError):
            enumerate_hyperbox([], 10.0)
        with pytest.raises(ValueError):
            enumerate_hyperbox([1.0, -2.0], 10.0)


class TestSphere:
    def test_lowest_level(self):
        spec = enumerate_sphere(10.0)
        # l=0, n=1: k = pi, unit volume => eps = pi^2 / (3 pi^2 / 4)^(2/3)
        scale = (3 * math.pi**2 / 4) ** (2 / 3)
        assert spec.energies[0] == pytest.approx(math.pi**2 / scale, rel=1e-12)
        assert spec.degeneracies[0] == 1

    def test_degeneracies_are_2l_plus_1(self):
        spec = enumerate_sphere(15.0)
        for level in spec.levels:
            (l, n), = level.labels
            assert level.degeneracy == 2 * l + 1
            assert level.energy == pytest.approx(
                bessel_zero("spherical", l, n) ** 2 / (3 * math.pi**2 / 4) ** (2 / 3),
                rel=1e-12,
            )

    def test_level_count_matches_zero_count(self):
        k_max = 20.0
        count = 0
        l = 0
        while bessel_zero("spherical", l, 1) <= k_max:
            n = 1
            while bessel_zero("spherical", l, n) <= k_max:
                count += 1
                n += 1
            l += 1
        assert len(enumerate_sphere(k_max)) == count


class TestCylinder:
    def test_lowest_level_unit_volume(self):
        h, r = 1.0, 1.0  # normalized internally to pi r^2 h = 1
        spec = enumerate_cylinder(h, r, 60.0)
        s = (math.pi) ** (1 / 3)  # normalization shrink factor for h = r = 1
        k01 = bessel_zero("ordinary", 0, 1)
        expected = math.pi**2 / (h / s) ** 2 + k01**2 / (r / s) ** 2
        assert spec.energies[0] == pytest.approx(expected, rel=1e-12)

    def test_azimuthal_degeneracy(self):
        spec = enumerate_cylinder(1.0, 1.0, 80.0)
        for level in spec.levels:
            (q, l, n), = level.labels
            assert level.degeneracy == (1 if l == 0 else 2)

    def test_raw_energies(self):
        spec = enumerate_cylinder(2.0, 1.0, 40.0, normalize=False)
        k01 = bessel_zero("ordinary", 0, 1)
        assert spec.energies[0] == pytest.approx(math.pi**2 / 4 + k01**2, rel=1e-12)


class TestRelativisticSquare:
    def test_energies_are_sqrt_sums(self):
        spec = enumerate_relativistic_square(12.0)
        oracle: dict[int, int] = {}
        for nx in range(1, 13):
            for ny in range(1, 13):
                s = nx * nx + ny * ny
                if s <= 144:
                    oracle[s] = oracle.get(s, 0) + 1
        expected = sorted((math.sqrt(s), d) for s, d in oracle.items())
        got = list(zip(spec.energies, spec.degeneracies))
        assert len(got) == len(expected)
        for (e, d), (ee, dd) in zip(got, expected):
            assert e == pytest.approx(ee, rel=1e-12)
            assert d == dd

    def test_massless_dispersion_is_linear_not_quadratic(self):
        spec = enumerate_relativistic_square(10.0)
        assert spec.energies[0] == pytest.approx(math.sqrt(2.0), rel=1e-12)


class TestRandomSpectrum:
    def test_reproducible(self):
        a = random_power_spectrum(200, 0.5, 777)
        b = random_power_spectrum(200, 0.5, 777)
        np.testing.assert_array_equal(a.energies, b.energies)

    def test_different_seeds_differ(self):
        a = random_power_spectrum(200, 0.5, 777)
        b = random_power_spectrum(200, 0.5, 778)
        assert not np.array_equal(a.energies, b.energies)

    def test_counting_tracks_prescribed_density(self):
        # With g = (pi/4) sqrt(eps), N(eps) = (pi/6) eps^1.5; the k-th
        # sampled level sits where N crosses k, so N(eps_k) ~ k.
        spec = random_power_spectrum(4000, 0.5, 4242)
        e = spec.energies
        ranks = np.arange(1, 4001)
        predicted = (math.pi / 6) * e**1.5
        err = np.abs(predicted - ranks) / ranks
        assert np.median(err[100:]) < 0.05

    def test_bad_args(self):
        with pytest.raises(ValueError):
            random_power_spectrum(0, 0.5, 1)
        with pytest.raises(ValueError):
            random_power_spectrum(10, -1.5, 1)


class TestMergeLevels:
    def test_merges_within_tolerance(self):
        spec = merge_levels([(1.0, 1, ()), (1.0 + 1e-13, 1, ()), (2.0, 3, ())], 10.0)
        assert len(spec) == 2
        assert spec.degeneracies[0] == 2

    def test_exact_mode_keeps_integer_keys(self):
        spec = merge_levels([(3, 1, ()), (3, 1, ()), (5, 1, ())], 10.0, exact=True)
        assert list(spec.energies) == [3, 5]
        assert list(spec.degeneracies) == [2, 1]

    def test_spectrum_expand(self):
        spec = Spectrum((Level(2.0, 2), Level(3.0, 4), Level(5.0, 3)), 5.0)
        assert list(spec.expand()) == [2.0] * 2 + [3.0] * 4 + [5.0] * 3
        assert spec.total_states == 9
