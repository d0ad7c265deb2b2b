"""Special-function layer: frozen references, identities, honest failure."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entdeg import specfun
from entdeg.errors import PoleError, PrecisionError, UnderflowToZero

from _oracles import first_derivative, second_derivative

# Frozen with an independent arbitrary-precision evaluation (30 digits).
FROZEN_J = {
    (0.3, 1.0): complex(0.84432835787009727, 0.029326697437042433),
    (0.3, 8.0): complex(0.19238425329569575, 0.10876685561987924),
    (0.02, 0.5): complex(0.93869968562835646, -0.013972946582760999),
    (2.0, 3.0): complex(0.092147806138901814, 4.8585083211809693),
    (0.3, 50.0): complex(0.062026069512043066, -0.047965586825104801),
    (0.1, 200.0): complex(-0.015629656050347944, -0.0085590836480181154),
}
FROZEN_JP = {(0.3, 1.0): complex(-0.44044890865836763, 0.39500163080008025)}
FROZEN_K = {
    (0.3, 2.0): 0.11178684183332567,
    (0.1, 0.7): 0.65735807309904366,
    (1.0, 5.0): 0.0033670999885610447,
}
FROZEN_H1 = {
    (0.3, 0.5): complex(1.41920078778402, -0.77451832053291061),
    (0.3, 1.0): complex(1.215157184959177, 0.096099721754332381),
}
FROZEN_LOGGAMMA = {
    complex(1, 0.3): complex(-0.071946250899638399, -0.16282067216785568),
    complex(1, 1): complex(-0.65092319930185634, -0.3016403204675332),
}
J0_1 = 0.76519768655796655
Y0_1 = 0.088256964215676958
K0_1 = 0.42102443824070833


class TestFrozenReferences:
    @pytest.mark.parametrize("key", sorted(FROZEN_J))
    def test_bessel_j(self, key):
        nu, z = key
        got = specfun.bessel_j_imag(nu, z)
        assert abs(got - FROZEN_J[key]) <= 1e-12 * abs(FROZEN_J[key])

    def test_bessel_j_deriv(self):
        got = specfun.bessel_j_imag_deriv(0.3, 1.0)
        want = FROZEN_JP[(0.3, 1.0)]
        assert abs(got - want) <= 1e-12 * abs(want)

    @pytest.mark.parametrize("key", sorted(FROZEN_K))
    def test_macdonald(self, key):
        nu, x = key
        assert abs(specfun.macdonald_k_imag(nu, x) - FROZEN_K[key]) <= 1e-10 * abs(
            FROZEN_K[key]
        )

    @pytest.mark.parametrize("key", sorted(FROZEN_H1))
    def test_hankel1(self, key):
        nu, z = key
        got = specfun.hankel1_imag(nu, z)
        assert abs(got - FROZEN_H1[key]) <= 1e-11 * abs(FROZEN_H1[key])

    @pytest.mark.parametrize("a", sorted(FROZEN_LOGGAMMA, key=lambda c: c.imag))
    def test_log_gamma(self, a):
        got = specfun.log_gamma_complex(a)
        assert abs(got - FROZEN_LOGGAMMA[a]) <= 1e-13

    def test_real_order_limits(self):
        assert abs(specfun.bessel_j_imag(0.0, 1.0) - J0_1) <= 1e-12
        h = specfun.hankel1_imag(0.0, 1.0)
        assert abs(h - complex(J0_1, Y0_1)) <= 1e-10
        assert abs(specfun.macdonald_k_imag(0.0, 1.0) - K0_1) <= 1e-10
        # classic ratio, pinned at 1e-10 as an end-to-end sanity anchor
        assert abs(
            specfun.macdonald_k_imag(0.0, 1.0) / specfun.bessel_j_imag(0.0, 1.0).real
            - K0_1 / J0_1
        ) <= 1e-10


class TestIdentities:
    @pytest.mark.parametrize("y", [0.1, 0.3, 1.0, 2.5])
    def test_gamma_reflection_magnitude(self, y):
        # Gamma(1+iy) Gamma(1-iy) = pi y / sinh(pi y)
        g = specfun.log_gamma_complex(complex(1.0, y))
        lhs = math.exp(2.0 * g.real)
        rhs = math.pi * y / math.sinh(math.pi * y)
        assert abs(lhs - rhs) <= 1e-12 * rhs

    @pytest.mark.parametrize("nu", [0.05, 0.3, 1.0, 2.0])
    @pytest.mark.parametrize("z", [0.05, 0.7, 3.0, 11.0, 20.0, 80.0])
    def test_wronskian(self, nu, z):
        # J_{i nu} J'_{-i nu} - J'_{i nu} J_{-i nu} = -2i sinh(pi nu)/(pi z)
        j = specfun.bessel_j_imag(nu, z)
        jp = specfun.bessel_j_imag_deriv(nu, z)
        lhs = j * jp.conjugate() - jp * j.conjugate()
        rhs = complex(0.0, -2.0 * math.sinh(math.pi * nu) / (math.pi * z))
        assert abs(lhs - rhs) <= 1e-8 * abs(rhs)

    @settings(max_examples=60, deadline=None)
    @given(
        nu=st.floats(min_value=0.01, max_value=3.0),
        z=st.floats(min_value=0.05, max_value=100.0),
    )
    def test_conjugation_property(self, nu, z):
        # J_{-i nu}(z) computed directly must equal conj(J_{i nu}(z)).
        plus = specfun.bessel_j_imag(nu, z)
        minus = specfun._bessel_j_generic(complex(0.0, -nu), z, 1e-10, 12.0)
        assert abs(minus - plus.conjugate()) <= 1e-13 * max(1.0, abs(plus))

    @pytest.mark.parametrize("nu", [0.1, 0.3, 2.0])
    @pytest.mark.parametrize("z", [0.8, 5.0, 30.0])
    def test_bessel_ode_residual(self, nu, z):
        # z^2 f'' + z f' + (z^2 + nu^2) f = 0 for f = J_{i nu}
        f = lambda x: specfun.bessel_j_imag(nu, x)
        h = 1e-3 * max(1.0, z)
        res = (
            z * z * second_derivative(f, z, h)
            + z * first_derivative(f, z, h)
            + (z * z + nu * nu) * f(z)
        )
        scale = (z * z + nu * nu) * abs(f(z))
        assert abs(res) <= 1e-8 * scale

    @pytest.mark.parametrize("nu", [0.1, 0.5])
    @pytest.mark.parametrize("x", [0.7, 2.0, 6.0])
    def test_macdonald_ode_residual(self, nu, x):
        # x^2 f'' + x f' - (x^2 - nu^2) f = 0 for f = K_{i nu}
        f = lambda t: specfun.macdonald_k_imag(nu, t, rtol=1e-12)
        h = 1e-3 * max(1.0, x)
        res = (
            x * x * second_derivative(f, x, h)
            + x * first_derivative(f, x, h)
            - (x * x - nu * nu) * f(x)
        )
        scale = (x * x + nu * nu) * max(abs(f(x)), 1e-3)
        assert abs(res) <= 1e-8 * scale

    def test_hankel_small_nu_branch_continuity(self):
        lo = specfun.hankel1_imag(5e-7, 1.3)
        hi = specfun.hankel1_imag(2e-6, 1.3)
        assert abs(lo - hi) <= 1e-5 * abs(hi)

    def test_hankel_connection_vs_asymptotic(self):
        # series+connection route against the asymptotic route near the switch
        a = specfun.hankel1_imag(0.3, 11.5, z_switch=12.0)
        b = specfun.hankel1_imag(0.3, 11.5, z_switch=10.0)
        assert abs(a - b) <= 1e-9 * abs(a)

    def test_bessel_switch_continuity(self):
        a = specfun.bessel_j_imag(0.3, 11.5, z_switch=12.0)
        b = specfun.bessel_j_imag(0.3, 11.5, z_switch=10.0)
        assert abs(a - b) <= 1e-9 * abs(a)


class TestFailureModes:
    @pytest.mark.parametrize("a", [0.0, -1.0, -7.0])
    def test_log_gamma_pole(self, a):
        with pytest.raises(PoleError):
            specfun.log_gamma_complex(a)

    def test_series_cancellation_is_reported(self):
        # forcing the power series far past its useful range must raise,
        # never silently return garbage
        with pytest.raises(PrecisionError):
            specfun.bessel_j_imag(0.3, 40.0, z_switch=50.0)

    def test_macdonald_underflow_warns(self):
        with pytest.warns(UnderflowToZero):
            assert specfun.macdonald_k_imag(0.3, 800.0) == 0.0

    def test_macdonald_array_matches_scalar(self):
        xs = np.array([0.5, 1.0, 3.0, 20.0])
        arr = specfun.macdonald_k_imag(0.3, xs)
        for x, v in zip(xs, arr):
            assert abs(v - specfun.macdonald_k_imag(0.3, float(x))) <= 1e-12 * max(
                abs(v), 1e-300
            )

    @pytest.mark.parametrize("bad", [-0.1, math.nan, math.inf])
    def test_invalid_nu(self, bad):
        with pytest.raises(ValueError):
            specfun.bessel_j_imag(bad, 1.0)

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_invalid_argument(self, bad):
        with pytest.raises(ValueError):
            specfun.bessel_j_imag(0.3, bad)
        with pytest.raises(ValueError):
            specfun.macdonald_k_imag(0.3, bad)
