import cmath
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from singular_zeta import specfun as sf
from singular_zeta.errors import PoleError

# frozen 40-digit mpmath values
GAMMA_25_1 = complex(0.77476210455108367117, 0.70763120437959258559)
GAMMA_M15_05 = complex(0.93791666278788505097, 0.34920566814780486859)
DIGAMMA_03_M2 = complex(0.68752359374910397224, -1.672730211056628644)
DIGAMMA_75 = 1.9467574842460867881
M_SPECTRAL = complex(-0.00029085541750174530196, -0.00010895026275848658294)  # M(1+1/(7i), 2, 7i)
M_07_2_M30 = 0.10230102351994626842
M_13_2_55 = 5.1670471259991451957e22
U_15_07 = 1.0619596215641264935
U_SPECTRAL = complex(0.038796184665258260241, -0.12606898644748764984)  # U(1+1/(6i), 2, 6i)
U_08_25 = 0.076620312926312877609
ZETA_03_4 = complex(0.57575637861406807506, 0.10773024520055680808)
ZETA_M25 = 0.0085169287778503305424
J1_ZEROS = (3.8317059702075123156, 7.0155866698156187535)
J1_ZERO_5 = 16.470630050877632813


def close(a, b, rtol):
    return abs(a - b) <= rtol * max(abs(b), 1e-300)


class TestGamma:
    def test_trivial_values(self):
        assert close(sf.gamma_complex(1.0), 1.0, 1e-13)
        assert close(sf.gamma_complex(0.5), math.sqrt(math.pi), 1e-14)

    def test_frozen(self):
        assert close(sf.gamma_complex(2.5 + 1j), GAMMA_25_1, 1e-13)
        assert close(sf.gamma_complex(-1.5 + 0.5j), GAMMA_M15_05, 1e-13)

    def test_gamma_1_plus_i(self):
        ref = complex(mp.gamma(1 + 1j))
        assert close(sf.gamma_complex(1 + 1j), ref, 1e-13)

    def test_pole(self):
        with pytest.raises(PoleError):
            sf.gamma_complex(-3.0)

    def test_reflection_grid(self):
        rng = np.random.default_rng(7)
        count = 0
        while count < 100:
            z = complex(rng.uniform(-14, 14), rng.uniform(-14, 14))
            if abs(z) > 20 or abs(z - round(z.real)) < 0.1:
                continue
            count += 1
            val = sf.gamma_complex(z) * sf.gamma_complex(1 - z) * cmath.sin(math.pi * z) / math.pi
            assert abs(val - 1) <= 1e-10

    @given(st.floats(-8, 8), st.floats(-8, 8))
    def test_conjugation(self, x, y):
        z = complex(x, y)
        assume(abs(z - round(x)) > 0.05)
        g = sf.gamma_complex(z)
        assert close(sf.gamma_complex(z.conjugate()), g.conjugate(), 1e-13)

    @given(st.floats(0.2, 30), st.floats(-30, 30))
    def test_against_mpmath(self, x, y):
        z = complex(x, y)
        ref = complex(mp.gamma(z))
        assume(abs(ref) > 1e-250)
        assert close(sf.gamma_complex(z), ref, 1e-12)


class TestDigamma:
    def test_trivial_values(self):
        assert close(sf.digamma_complex(1.0), -sf.EULER_GAMMA, 1e-14)
        assert close(sf.digamma_complex(2.0), 1 - sf.EULER_GAMMA, 1e-14)

    def test_frozen(self):
        assert close(sf.digamma_complex(0.3 - 2j), DIGAMMA_03_M2, 1e-13)
        assert close(sf.digamma_complex(7.5), DIGAMMA_75, 1e-14)
        assert close(sf.digamma_complex(0.5 + 3j), complex(mp.digamma(0.5 + 3j)), 1e-13)

    @given(st.floats(-6, 6), st.floats(-6, 6))
    def test_recurrence(self, x, y):
        z = complex(x, y)
        assume(abs(z - round(x)) > 0.05 and abs(z + 1 - round(x + 1)) > 0.05)
        lhs = sf.digamma_complex(z + 1)
        rhs = sf.digamma_complex(z) + 1 / z
        assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))

    @given(st.floats(-6, 6), st.floats(0.01, 6))
    def test_conjugation(self, x, y):
        z = complex(x, y)
        assert close(sf.digamma_complex(z.conjugate()), sf.digamma_complex(z).conjugate(), 1e-13)


class TestKummer:
    def test_at_zero(self):
        assert sf.kummer_m(0.3 + 1j, 2.0, 0.0) == 1.0

    def test_closed_form_identity(self):
        assert close(sf.kummer_m(1.0, 2.0, 2.0), (math.e ** 2 - 1) / 2, 1e-14)

    def test_frozen(self):
        assert close(sf.kummer_m(1 + 1 / 7j, 2.0, 7j), M_SPECTRAL, 1e-10)
        assert close(sf.kummer_m(0.7, 2.0, -30.0), M_07_2_M30, 1e-12)
        assert close(sf.kummer_m(1.3, 2.0, 55.0), M_13_2_55, 1e-12)

    def test_near_first_dirichlet_root(self):
        z = 3.500788704
        val = cmath.exp(-1j * z) * sf.kummer_m(1 + 1 / (2j * z), 2.0, 2j * z)
        assert abs(val) <= 1e-9

    @given(st.floats(-3, 3), st.floats(0.5, 4), st.floats(-20, 20), st.floats(-20, 20))
    def test_contiguous_relation(self, a, b, x, y):
        # (b - a) M(a-1) + (2a - b + z) M(a) - a M(a+1) = 0
        assume(abs(a) > 1e-3)
        z = complex(x, y)
        m0, mm, mp1 = (sf.kummer_m(a + d, b, z) for d in (0.0, -1.0, 1.0))
        terms = [(b - a) * mm, (2 * a + (z - b)) * m0, -a * mp1]
        scale = sum(abs(t) for t in terms) + 1e-300
        assert abs(sum(terms)) <= 1e-9 * scale

    @given(st.floats(0.2, 3), st.floats(-25, 25), st.floats(-25, 25))
    def test_conjugation(self, a, x, y):
        z = complex(x, y)
        assert close(sf.kummer_m(a, 2.0, z.conjugate()), sf.kummer_m(a, 2.0, z).conjugate(), 1e-12)

    @pytest.mark.parametrize("a", [0.6, 1.0 + 0.3j, 1.0 + 1 / (2j * 20), 1.7])
    @pytest.mark.parametrize("phase", [0.0, 0.5, math.pi / 2, 2.5])
    def test_regime_overlap(self, a, phase):
        z = sf.Z_SWITCH * cmath.exp(1j * phase)
        s = sf.kummer_m(a, 2.0, z, method="series")
        asy = sf.kummer_m(a, 2.0, z, method="asymptotic")
        assert abs(s - asy) <= 1e-8 * abs(s)

    def test_nonpositive_b(self):
        with pytest.raises(PoleError):
            sf.kummer_m(1.0, -2.0, 1.0)

    @given(st.floats(0.2, 3), st.floats(-40, 40), st.floats(-40, 40))
    def test_against_mpmath(self, a, x, y):
        z = complex(x, y)
        ref = complex(mp.hyp1f1(a, 2, z))
        assume(abs(ref) > 1e-200)
        assert close(sf.kummer_m(a, 2.0, z), ref, 1e-9)


class TestTricomi:
    def test_frozen(self):
        assert close(sf.tricomi_u_b2(1.5, 0.7), U_15_07, 1e-12)
        assert close(sf.tricomi_u_b2(1 + 1 / 6j, 6j), U_SPECTRAL, 1e-10)
        assert close(sf.tricomi_u_b2(0.8, 25.0), U_08_25, 1e-11)

    def test_small_z_limit(self):
        a, z = 1.3, 1e-6
        val = (sf.tricomi_u_b2(a, z) * z).real
        assert abs(val - 1 / math.gamma(a)) <= 1e-4

    def test_large_z_limit(self):
        a, z = 0.7, 400.0
        assert abs((z ** a * sf.tricomi_u_b2(a, z)).real - 1) <= 1e-6 * 2 + abs(a * (a - 1) / z)

    def test_wronskian(self):
        # W{M, U} = -Gamma(b) z^{-b} e^z / Gamma(a) at b = 2
        a, z, h = 1.2, 3.0, 1e-4
        m = sf.kummer_m(a, 2.0, z)
        dm = 0.5 * a * sf.kummer_m(a + 1, 3.0, z)
        u = sf.tricomi_u_b2(a, z)
        du = -a * complex(mp.hyperu(a + 1, 3, z))
        w = m * du - dm * u
        assert close(w, -math.exp(z) / (z * z * math.gamma(a)), 1e-10)

    @given(st.floats(0.3, 3), st.floats(-30, 30), st.floats(0.2, 30))
    def test_conjugation(self, a, x, y):
        z = complex(x, y)
        assert close(sf.tricomi_u_b2(a, z.conjugate()), sf.tricomi_u_b2(a, z).conjugate(), 1e-10)

    @given(st.floats(0.3, 3), st.floats(-30, 30), st.floats(-30, 30))
    def test_against_mpmath(self, a, x, y):
        z = complex(x, y)
        assume(abs(z) > 0.05 and not (x < 0 and abs(y) < 1e-3))
        ref = complex(mp.hyperu(a, 2, z))
        assert close(sf.tricomi_u_b2(a, z), ref, 1e-9)


class TestRiemannZeta:
    def test_trivial_values(self):
        assert close(sf.riemann_zeta(2.0), math.pi ** 2 / 6, 1e-14)
        assert close(sf.riemann_zeta(-1.0), -1 / 12, 1e-13)

    def test_zeta3(self):
        assert abs(sf.riemann_zeta(3.0) - 1.2020569032) <= 1e-10

    def test_frozen(self):
        assert close(sf.riemann_zeta(0.3 + 4j), ZETA_03_4, 1e-12)
        assert close(sf.riemann_zeta(-2.5), ZETA_M25, 1e-12)

    def test_pole(self):
        with pytest.raises(PoleError):
            sf.riemann_zeta(1.0)


class TestBesselZeros:
    def test_frozen(self):
        assert abs(sf.bessel_j1_zero(1) - J1_ZEROS[0]) <= 1e-13
        assert abs(sf.bessel_j1_zero(2) - J1_ZEROS[1]) <= 1e-13
        assert abs(sf.bessel_j1_zero(5) - J1_ZERO_5) <= 1e-12

    def test_rough_values(self):
        assert abs(sf.bessel_j1_zero(1) - 3.8317059702) <= 1e-10
        assert abs(sf.bessel_j1_zero(2) - 7.0155866698) <= 1e-10

    @pytest.mark.parametrize("k", [1, 2, 3, 8])
    def test_is_zero(self, k):
        assert abs(sf.bessel_j1(sf.bessel_j1_zero(k))) <= 1e-12

    def test_critical_value(self):
        assert abs(sf.bessel_j1_zero(1) ** 2 / 4 - 3.67049266) <= 1e-8
