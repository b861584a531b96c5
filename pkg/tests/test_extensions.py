import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singular_zeta import ExtensionParam, ProblemConfig, extensions as ext, spectrum, zeta
from singular_zeta.errors import ValidationError
from singular_zeta.specfun import EULER_GAMMA, digamma_complex

# frozen mpmath values at alpha = L = 1
F_2_PLUS_I = complex(1.9587498900786822509, -0.33765989449784883981)
BETA0_ROOTS = (0.32528128633853188418, 4.4980490910523933533, 7.7133892529205839199)
BETA_M20_ROOT1 = 3.5989896145041162893
BETA_35_ROOT0 = 3.4415897311984304971


def by_index(sl):
    return {sl.n_start + i: z for i, z in enumerate(sl.roots)}


class TestF:
    def test_frozen(self, unit_cfg):
        assert abs(ext.f_of_z(unit_cfg, 2 + 1j) - F_2_PLUS_I) <= 1e-13

    def test_conjugation(self, unit_cfg):
        z = 2 + 1j
        assert abs(ext.f_of_z(unit_cfg, -z.conjugate()) - ext.f_of_z(unit_cfg, z).conjugate()) <= 1e-13

    def test_large_z_linear_growth(self, unit_cfg):
        # psi(x) ~ -1/x - gamma at small x turns iz/alpha into -iz/alpha
        z = 1e3 * np.exp(0.3j)
        val = ext.f_of_z(unit_cfg, z)
        assert abs(abs(val) / abs(z) - 1.0) <= 1e-2
        assert abs(val + 1j * z - np.log(2j * z) - EULER_GAMMA + 1) <= 1e-2

    @settings(max_examples=25)
    @given(st.floats(0.05, 50.0))
    def test_lower_imaginary_axis_real(self, w):
        cfg = ProblemConfig(1.0)
        val = ext.f_of_z(cfg, -1j * w)
        ref = w + float(digamma_complex(1 / (2 * w)).real) + math.log(2 * w) + 2 * EULER_GAMMA - 1
        assert abs(val.imag) <= 1e-12 * max(1.0, abs(val))
        assert abs(val.real - ref) <= 1e-11 * max(1.0, abs(ref))

    def test_zero_rejected(self, unit_cfg):
        with pytest.raises(ValidationError):
            ext.f_of_z(unit_cfg, 0.0)

    def test_requires_repulsive(self):
        with pytest.raises(ValidationError):
            ext.f_of_z(ProblemConfig(0.0), 1.0)


class TestSpectralFunction:
    @pytest.mark.parametrize("beta", [-20.0, 0.0, 35.0])
    def test_reality_grid(self, unit_cfg, beta):
        param = ExtensionParam(beta)
        for z in np.linspace(0.5, 60.0, 120):
            ext.spectral_function_beta(unit_cfg, param, float(z))

    @pytest.mark.parametrize("z", [0.7, 2.3, 5.1])
    def test_matches_determinant(self, unit_cfg, z):
        param = ExtensionParam(0.0)
        a = ext.spectral_function_beta(unit_cfg, param, z).real
        b = ext.determinant_real(unit_cfg, param, z)
        assert abs(a - b) <= 1e-10 * max(1.0, abs(b))

    def test_dirichlet_zero(self, unit_cfg, dirichlet):
        z1 = spectrum.solve_spectrum(unit_cfg, 1).roots[0]
        assert abs(ext.spectral_function_beta(unit_cfg, dirichlet, z1)) <= 1e-12


class TestSpectrumBeta:
    def test_frozen_beta0(self, unit_cfg):
        sl = ext.solve_spectrum_beta(unit_cfg, ExtensionParam(0.0), 2)
        assert sl.n_start == 0
        for got, ref in zip(sl.roots, BETA0_ROOTS):
            assert abs(got - ref) <= 1e-12

    def test_frozen_beta_m20_and_35(self, unit_cfg):
        assert abs(by_index(ext.solve_spectrum_beta(unit_cfg, ExtensionParam(-20.0), 1))[1]
                   - BETA_M20_ROOT1) <= 1e-12
        assert abs(by_index(ext.solve_spectrum_beta(unit_cfg, ExtensionParam(35.0), 1))[0]
                   - BETA_35_ROOT0) <= 1e-12

    def test_dirichlet_passthrough(self, unit_cfg, dirichlet):
        a = ext.solve_spectrum_beta(unit_cfg, dirichlet, 13).roots
        b = spectrum.solve_spectrum(unit_cfg, 13).roots
        assert max(abs(x - y) for x, y in zip(a, b)) <= 1e-8

    def test_large_beta_limit(self, unit_cfg):
        big = by_index(ext.solve_spectrum_beta(unit_cfg, ExtensionParam(1e9), 3))
        dir_roots = spectrum.solve_spectrum(unit_cfg, 4).roots
        for n in range(3):
            assert abs(big[n] - dir_roots[n]) <= 1e-8

    @pytest.mark.parametrize("beta", [-20.0, 35.0])
    def test_interlacing(self, unit_cfg, beta):
        sl = ext.solve_spectrum_beta(unit_cfg, ExtensionParam(beta), 10)
        d = (0.0,) + spectrum.solve_spectrum(unit_cfg, 11).roots
        for n, z in by_index(sl).items():
            assert d[n] < z < d[n + 1]

    def test_large_n_offset(self, unit_cfg):
        z50 = by_index(ext.solve_spectrum_beta(unit_cfg, ExtensionParam(0.0), 50))[50]
        assert abs(z50 - 50 * math.pi - math.pi / 2) <= 0.02

    def test_asymptotic_formula(self, unit_cfg):
        param = ExtensionParam(0.0)
        z40 = by_index(ext.solve_spectrum_beta(unit_cfg, param, 40))[40]
        assert abs(z40 - ext.asymptotic_eigenvalue_beta(unit_cfg, param, 40)) <= 1e-3

    @settings(max_examples=6)
    @given(st.floats(-15.0, 30.0), st.floats(0.5, 10.0))
    def test_monotone_in_beta(self, beta, step):
        cfg = ProblemConfig(1.0)
        hi = by_index(ext.solve_spectrum_beta(cfg, ExtensionParam(beta + step), 3))
        lo = by_index(ext.solve_spectrum_beta(cfg, ExtensionParam(beta), 3))
        for n in (1, 2, 3):
            assert lo[n] < hi[n]

    def test_negative_mode_very_negative_beta(self, unit_cfg):
        modes = ext.negative_modes_beta(unit_cfg, ExtensionParam(-20.0))
        assert len(modes) == 1 and modes[0] > 0
        assert len(ext.negative_modes_beta(unit_cfg, ExtensionParam(0.0))) == 0

    def test_bad_n_max(self, unit_cfg):
        with pytest.raises(ValidationError):
            ext.solve_spectrum_beta(unit_cfg, ExtensionParam(0.0), 0)


class TestTheta:
    def test_reality_grid(self, unit_cfg):
        for theta in np.linspace(0.0, math.pi, 100, endpoint=False):
            bt = ext.beta_of_theta(unit_cfg, float(theta))
            assert isinstance(bt, float) and not math.isnan(bt)

    @pytest.mark.parametrize("theta", [0.0, 0.5, 1.5, 2.5])
    def test_boundary_ratio(self, unit_cfg, theta):
        bt = ext.beta_of_theta(unit_cfg, theta)
        fit = ext.boundary_ratio_from_function(unit_cfg, theta)
        assert abs(fit - bt) <= 1e-8 * max(1.0, abs(bt))

    def test_dirichlet_point(self, unit_cfg):
        theta = ext.dirichlet_theta(unit_cfg)
        assert math.isinf(ext.beta_of_theta(unit_cfg, theta))
        param = ext.param_from_theta(unit_cfg, theta)
        assert param.is_dirichlet
        a = ext.solve_spectrum_beta(unit_cfg, param, 3).roots
        assert a == spectrum.solve_spectrum(unit_cfg, 3).roots

    def test_param_carries_theta(self, unit_cfg):
        param = ext.param_from_theta(unit_cfg, 0.7)
        assert param.theta == 0.7
        assert param.beta == ext.beta_of_theta(unit_cfg, 0.7)


@pytest.fixture(scope="module")
def table0():
    return ext.pole_table_beta(ProblemConfig(1.0), ExtensionParam(0.0))


class TestPoleTable:
    def test_residue_half(self, table0):
        e = table0.entry(0.5)
        assert e.multiplicity == 1
        assert abs(e.numeric[0] - 1 / (2 * math.pi)) <= 1e-8

    def test_minus_half(self, table0):
        e = table0.entry(-0.5)
        assert e.multiplicity == 2
        assert abs(e.numeric[0] + 1 / (4 * math.pi)) <= 1e-4 / (4 * math.pi)

    def test_minus_one(self, table0):
        e = table0.entry(-1.0)
        bt = math.exp(-EULER_GAMMA + 4.0 / 3.0)
        assert e.multiplicity == 2
        assert abs(e.numeric[0] + 0.25) <= 1e-4 * 0.25
        c1 = -0.5 * (math.log(2 / bt) - 1.0 / 6.0)
        assert abs(e.numeric[1] - c1) <= 1e-4 * abs(c1)

    def test_minus_three_halves(self, table0):
        e = table0.entry(-1.5)
        assert e.multiplicity == 4
        assert abs(e.numeric[0] - 3 / (8 * math.pi)) <= 1e-4 * 3 / (8 * math.pi)
        assert e.difference <= 1e-6

    def test_no_spurious_orders(self, table0):
        assert max(e.spurious for e in table0.entries) <= 1e-6

    def test_beta_shift_of_c1(self, table0):
        other = ext.pole_table_beta(ProblemConfig(1.0), ExtensionParam(1.0))
        shift = other.entry(-1.0).numeric[1] - table0.entry(-1.0).numeric[1]
        assert abs(shift - 0.5) <= 1e-6

    def test_requires_finite_beta(self, unit_cfg, dirichlet):
        with pytest.raises(ValidationError):
            ext.pole_table_beta(unit_cfg, dirichlet)


def _direct_difference(cfg, param, s, n_solved=80, n_tail=1_000_000):
    rb = np.array(ext.solve_spectrum_beta(cfg, param, n_solved).roots)
    rd = np.array(spectrum.solve_spectrum(cfg, n_solved).roots)
    n = np.arange(n_solved + 1, n_tail + 1, dtype=float)
    ab = math.pi * n + math.pi / 2 - cfg.lam / (2 * math.pi * n) * (
        np.log(2 * math.pi * n) - 2 * math.log(cfg.lam) + EULER_GAMMA - 2 - 2 * param.beta)
    ad = spectrum.asymptotic_roots(cfg.lam, n)
    total = np.sum(rb ** (-2 * s)) - np.sum(rd ** (-2 * s)) + np.sum(ab ** (-2 * s) - ad ** (-2 * s))
    # leading remainder of the paired sum beyond n_tail
    return total - 0.5 * math.pi ** (-2 * s) * n_tail ** (-2 * s)


@pytest.mark.parametrize("s", [1.0, 0.8])
def test_difference_matches_direct(unit_cfg, s):
    param = ExtensionParam(0.0)
    cont = zeta.zeta_continued(unit_cfg, s, param=param) - zeta.zeta_continued(unit_cfg, s)
    assert abs(cont - _direct_difference(unit_cfg, param, s)) <= 1e-7
