import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from singular_zeta import ProblemConfig, oracle, spectrum
from singular_zeta.acceptance import TABLE1, TABLE1_ORDERS
from singular_zeta.errors import ValidationError

# 40-digit mpmath roots of e^{-izL} M(1 + alpha/(2iz), 2, 2izL)
ROOTS_A1_L1 = (3.5007887041367934447, 6.524098380401503809, 9.6085683839970431797)
ROOT1_A2_L1 = 3.8142740132918449164
ROOT1_A1_L2 = 1.9071370066459224582


class TestSpectralFunction:
    def test_free_root(self, free_cfg):
        assert abs(spectrum.spectral_function_dirichlet(free_cfg, math.pi)) <= 1e-11

    def test_table_root(self, unit_cfg):
        assert abs(spectrum.spectral_function_dirichlet(unit_cfg, 3.500788704)) <= 1e-8

    def test_sign_change(self, unit_cfg):
        a = spectrum.dirichlet_real(unit_cfg, 3.0)
        b = spectrum.dirichlet_real(unit_cfg, 4.0)
        assert a != 0 and a * b < 0


class TestAsymptotics:
    def test_examples(self, unit_cfg):
        assert f"{spectrum.asymptotic_eigenvalue(unit_cfg, 1, 'n1'):.9f}" == "3.141592654"
        assert f"{spectrum.asymptotic_eigenvalue(unit_cfg, 1, 'n-1'):.9f}" == "3.525966600"
        assert f"{spectrum.asymptotic_eigenvalue(unit_cfg, 5, 'n-3'):.8f}" == "15.83526998"

    @pytest.mark.parametrize("col", [0, 1, 2])
    def test_printed_columns(self, unit_cfg, col):
        for n, row in enumerate(TABLE1, start=1):
            printed = row[col]
            dec = len(printed.split(".")[1])
            assert f"{spectrum.asymptotic_eigenvalue(unit_cfg, n, TABLE1_ORDERS[col]):.{dec}f}" == printed

    def test_order_n5_converges_faster(self, unit_cfg):
        roots = ROOTS_A1_L1
        for n, z in enumerate(roots, start=1):
            e3 = abs(spectrum.asymptotic_eigenvalue(unit_cfg, n, "n-3") - z)
            e5 = abs(spectrum.asymptotic_eigenvalue(unit_cfg, n, "n-5") - z)
            assert e5 < e3

    def test_monotone_improvement(self, unit_cfg):
        sl = spectrum.solve_spectrum(unit_cfg, 13)
        for n in range(2, 14):
            errs = [abs(spectrum.asymptotic_eigenvalue(unit_cfg, n, o) - sl.roots[n - 1]) for o in TABLE1_ORDERS]
            assert all(a > b for a, b in zip(errs, errs[1:]))

    def test_invalid_index(self, unit_cfg):
        with pytest.raises(ValidationError):
            spectrum.asymptotic_eigenvalue(unit_cfg, 0, "n1")

    def test_vectorised_matches_scalar(self, unit_cfg):
        n = np.arange(1, 30)
        vec = spectrum.asymptotic_roots(1.0, n)
        ref = [spectrum.asymptotic_eigenvalue(unit_cfg, int(k), "n-5") for k in n]
        assert np.allclose(vec, ref, rtol=0, atol=1e-13)


class TestSolveSpectrum:
    def test_table_column(self, unit_cfg):
        sl = spectrum.solve_spectrum(unit_cfg, 13)
        assert len(sl) == 13 and sl.n_start == 1
        for z, row in zip(sl.roots, TABLE1):
            assert abs(z - float(row[4])) <= 1e-8

    def test_frozen_roots(self, unit_cfg):
        sl = spectrum.solve_spectrum(unit_cfg, 3)
        assert np.allclose(sl.roots, ROOTS_A1_L1, rtol=0, atol=1e-11)
        assert abs(spectrum.solve_spectrum(ProblemConfig(2.0), 1).roots[0] - ROOT1_A2_L1) <= 1e-11
        assert abs(spectrum.solve_spectrum(ProblemConfig(1.0, 2.0), 1).roots[0] - ROOT1_A1_L2) <= 1e-11

    def test_free(self, free_cfg):
        sl = spectrum.solve_spectrum(free_cfg, 5)
        assert np.allclose(sl.roots, math.pi * np.arange(1, 6), rtol=0, atol=1e-12)

    def test_residuals(self, unit_cfg):
        sl = spectrum.solve_spectrum(unit_cfg, 40)
        assert max(sl.residuals) <= unit_cfg.tol

    @settings(max_examples=8)
    @given(st.floats(0.05, 8.0), st.floats(0.3, 3.0))
    def test_above_free_spectrum(self, alpha, length):
        sl = spectrum.solve_spectrum(ProblemConfig(alpha, length), 12)
        n = np.arange(1, 13)
        assert np.all(np.asarray(sl.roots) > math.pi * n / length)
        assert np.all(np.diff(sl.roots) > 0)

    @settings(max_examples=6)
    @given(st.floats(0.1, 5.0), st.floats(0.5, 2.0))
    def test_scaling(self, alpha, length):
        a = spectrum.solve_spectrum(ProblemConfig(alpha * length, 1.0), 3).roots
        b = spectrum.solve_spectrum(ProblemConfig(alpha, length), 3).roots
        assert np.allclose(np.asarray(b) * length, a, rtol=1e-10)

    def test_count_matches_fd(self, unit_cfg):
        lam2 = 30.0 ** 2
        sl = spectrum.solve_spectrum(unit_cfg, 20)
        roots = np.asarray(sl.roots)
        grid = oracle.FdGrid.build(unit_cfg, 2000)
        diag = 2.0 / grid.h ** 2 + grid.potential_samples
        count = int(oracle.sturm_count(diag, 1.0 / grid.h ** 4, lam2)[0])
        assert count == int(np.sum(roots ** 2 < lam2))

    def test_agrees_with_fd_richardson(self, unit_cfg):
        sl = spectrum.solve_spectrum(unit_cfg, 5)
        for k in range(1, 6):
            r = oracle.fd_richardson(unit_cfg, k)
            assert abs(r.value - sl.roots[k - 1] ** 2) <= 1e-6 * sl.roots[k - 1] ** 2

    def test_invalid(self, unit_cfg):
        with pytest.raises(ValidationError):
            spectrum.solve_spectrum(unit_cfg, 0)


class TestCriticalCoupling:
    def test_values(self):
        assert abs(spectrum.critical_coupling(1.0) + 3.67049266) <= 1e-8
        assert abs(spectrum.critical_coupling(2.0) + 1.83524633) <= 1e-8

    def test_zero_mode_solution(self):
        # at the critical coupling z = 0 is an eigenvalue: shooting phi'' = (alpha/r) phi gives phi(L) = 0
        from singular_zeta import ExtensionParam
        cfg = ProblemConfig(spectrum.critical_coupling(1.0), 1.0)
        assert abs(oracle.end_value(cfg, ExtensionParam(), 0.0)) <= 1e-8


class TestNegativeModes:
    def test_one_mode(self):
        modes = spectrum.negative_modes(ProblemConfig(-4.0))
        assert len(modes) == 1 and modes[0] > 0

    def test_none(self):
        assert len(spectrum.negative_modes(ProblemConfig(-1.0))) == 0

    def test_zero_mode_flag(self):
        modes = spectrum.negative_modes(ProblemConfig(spectrum.critical_coupling(1.0)))
        assert modes.zero_mode

    def test_count_rule(self):
        for lam in (-4.0, -10.0, -13.0, -30.0):
            assert len(spectrum.negative_modes(ProblemConfig(lam))) == spectrum.zero_mode_count(lam)

    def test_repulsive_rejected(self, unit_cfg):
        with pytest.raises(ValidationError):
            spectrum.negative_modes(unit_cfg)


class TestEigenfunction:
    def test_boundary_values(self, unit_cfg):
        z = spectrum.solve_spectrum(unit_cfg, 1).roots[0]
        assert spectrum.eigenfunction(unit_cfg, z, 0.0) == 0.0
        assert abs(spectrum.eigenfunction(unit_cfg, z, 1.0)) <= 1e-8

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_normalised(self, unit_cfg, k):
        z = spectrum.solve_spectrum(unit_cfg, 3).roots[k - 1]
        val, _ = integrate.quad(lambda r: spectrum.eigenfunction(unit_cfg, z, r) ** 2, 0, 1, epsabs=1e-13, limit=200)
        assert abs(val - 1) <= 1e-9

    def test_orthogonal(self, unit_cfg):
        z1, z2 = spectrum.solve_spectrum(unit_cfg, 2).roots
        val, _ = integrate.quad(lambda r: spectrum.eigenfunction(unit_cfg, z1, r) * spectrum.eigenfunction(unit_cfg, z2, r),
                                0, 1, epsabs=1e-13, limit=200)
        assert abs(val) <= 1e-9

    def test_outside_interval(self, unit_cfg):
        with pytest.raises(ValidationError):
            spectrum.eigenfunction(unit_cfg, 3.5, 1.5)
