import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singular_zeta import ProblemConfig, heattrace, zeta
from singular_zeta.errors import NumericalError, ValidationError
from singular_zeta.specfun import EULER_GAMMA

# frozen mpmath sums of exp(-tau z_n^2)
FREE_TAU_001 = 2.3209479177387814054
FREE_TAU_03_L2 = 0.53006787530695116595
UNIT_TAU_1 = 4.758768931477755081e-6
UNIT_TAU_01 = 0.30786688584832732596


@pytest.fixture(scope="module")
def unit_fit(unit_cfg):
    return heattrace.fit_small_tau(unit_cfg, heattrace.sample_window(unit_cfg))


class TestHeatTrace:
    def test_free_small_tau(self, free_cfg):
        smp = heattrace.heat_trace(free_cfg, 0.01)
        assert abs(smp.value - FREE_TAU_001) <= 1e-10 * smp.value
        assert smp.error <= 1e-10 * smp.value

    def test_free_theta_identity(self, free_cfg):
        tau = 0.01
        approx = 1 / math.sqrt(4 * math.pi * tau) - 0.5
        assert abs(heattrace.heat_trace(free_cfg, tau).value - approx) <= 1e-7

    def test_free_scaled_length(self):
        smp = heattrace.heat_trace(ProblemConfig(0.0, 2.0), 0.3)
        assert abs(smp.value - FREE_TAU_03_L2) <= 1e-12

    def test_ground_state_dominates(self, unit_cfg):
        smp = heattrace.heat_trace(unit_cfg, 1.0)
        assert abs(smp.value - UNIT_TAU_1) <= 1e-10 * UNIT_TAU_1
        assert abs(smp.value / math.exp(-3.500788704 ** 2) - 1) <= 1e-4

    def test_unit_moderate_tau(self, unit_cfg):
        smp = heattrace.heat_trace(unit_cfg, 0.1)
        assert abs(smp.value - UNIT_TAU_01) <= 1e-10

    def test_monotone_example(self, unit_cfg):
        assert heattrace.heat_trace(unit_cfg, 0.02).value > heattrace.heat_trace(unit_cfg, 0.05).value

    @settings(max_examples=20)
    @given(st.floats(1e-3, 1.0), st.floats(1.01, 3.0))
    def test_strictly_decreasing(self, tau, factor):
        cfg = ProblemConfig(1.0)
        a = heattrace.heat_trace(cfg, tau).value
        b = heattrace.heat_trace(cfg, tau * factor).value
        assert 0 < b < a

    def test_nonpositive_tau_rejected(self, unit_cfg):
        with pytest.raises(ValidationError):
            heattrace.heat_trace(unit_cfg, 0.0)

    def test_tiny_tau_rejected(self, unit_cfg):
        with pytest.raises(NumericalError):
            heattrace.heat_trace(unit_cfg, 1e-12)


class TestFit:
    def test_unit_coefficients(self, unit_fit):
        assert abs(unit_fit.b1 - 0.5) <= 0.005
        assert abs(unit_fit.a1 + EULER_GAMMA / 2) <= 0.003
        assert abs(unit_fit.a0 - 1.0) <= 1e-3
        assert abs(unit_fit.a_half + math.sqrt(math.pi)) <= 1e-2 * math.sqrt(math.pi)

    def test_fit_diagnostics(self, unit_fit):
        assert unit_fit.condition <= 1e10
        assert unit_fit.residual_norm <= 1e-9
        assert len(unit_fit.guards) == 5

    def test_free_expansion(self, free_cfg):
        fit = heattrace.fit_small_tau(free_cfg, heattrace.sample_window(free_cfg))
        assert abs(fit.a0 - 1.0) <= 1e-6
        assert abs(fit.a_half + math.sqrt(math.pi)) <= 1e-6
        assert abs(fit.a1) <= 1e-6
        assert abs(fit.b1) <= 1e-6

    @pytest.mark.parametrize("length", [0.5, 1.0, 2.0])
    def test_prefactor_scaling(self, length):
        cfg = ProblemConfig(1.0, length)
        fit = heattrace.fit_small_tau(cfg, heattrace.sample_window(cfg))
        assert abs(fit.a0 - length) <= 1e-3 * length

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_b1_linear(self, alpha):
        cfg = ProblemConfig(alpha)
        fit = heattrace.fit_small_tau(cfg, heattrace.sample_window(cfg))
        assert abs(fit.b1 / alpha - 0.5) <= 0.005

    def test_matches_closed_form(self):
        cfg = ProblemConfig(2.0, 1.0)
        fit = heattrace.fit_small_tau(cfg, heattrace.sample_window(cfg))
        ref = heattrace.expected_coefficients(cfg)
        assert abs(fit.a1 - ref["a1"]) <= 0.01 * abs(ref["a1"])
        assert abs(fit.b1 - ref["b1"]) <= 0.01 * ref["b1"]

    def test_too_few_samples(self, unit_cfg):
        with pytest.raises(ValidationError):
            heattrace.fit_small_tau(unit_cfg, heattrace.sample_window(unit_cfg)[:11])

    def test_window_enforced(self, unit_cfg):
        samples = [heattrace.heat_trace(unit_cfg, t) for t in np.geomspace(1e-3, 0.5, 14)]
        with pytest.raises(ValidationError):
            heattrace.fit_small_tau(unit_cfg, samples)

    def test_ill_conditioning_reported(self, unit_cfg):
        samples = [heattrace.heat_trace(unit_cfg, t) for t in np.geomspace(1e-3, 1.1e-3, 14)]
        with pytest.raises(ValidationError):
            heattrace.fit_small_tau(unit_cfg, samples)


class TestZetaConsistency:
    def test_poles_from_fit(self, unit_cfg, unit_fit):
        implied = heattrace.zeta_poles_from_fit(unit_fit, unit_cfg.mu)
        res_half = zeta.laurent_at(unit_cfg, 0.5).coefficient(-1).real
        lau = zeta.laurent_at(unit_cfg, -0.5)
        assert abs(implied["c-1(1/2)"] - res_half) <= 0.01 * abs(res_half)
        assert abs(implied["c-2(-1/2)"] - lau.coefficient(-2).real) <= 0.01 * abs(lau.coefficient(-2).real)
        assert abs(implied["c-1(-1/2)"] - lau.coefficient(-1).real) <= 0.01 * abs(lau.coefficient(-1).real)

    @pytest.mark.parametrize("s", [1.0, 1.5])
    def test_mellin_matches_direct(self, unit_cfg, unit_fit, s):
        assert abs(heattrace.mellin_zeta(unit_cfg, s, fit=unit_fit)
                   - zeta.zeta_direct(unit_cfg, s).value.real) <= 1e-6

    def test_mellin_domain(self, unit_cfg):
        with pytest.raises(ValidationError):
            heattrace.mellin_zeta(unit_cfg, 0.5)
