"""Frequency matching, squeezing parameter, Bogoliubov coefficients."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entdeg import bogoliubov
from entdeg.errors import SmallNuError
from entdeg.spacetime import ModeSpec

from _oracles import squeezing_q_abs_via_ode

SCENARIOS = (
    ModeSpec(m=1.0, w=1.0, K=0.1),
    ModeSpec(m=1.0, w=1.0, K=0.3),
    ModeSpec(m=1.0, w=5.0, K=0.1),
    ModeSpec(m=1.0, w=5.0, K=0.3),
)


def _t0_from_ttilde(spec: ModeSpec, tt: float) -> float:
    return -math.log(tt * spec.w / spec.m) / spec.w


class TestFrequencyMatch:
    @pytest.mark.parametrize("spec", SCENARIOS, ids=str)
    @pytest.mark.parametrize("T0", [-3.0, 0.0, 2.0])
    def test_defining_property(self, spec, T0):
        # the matched solution must satisfy dF/dT = -i W F at T0 and be
        # normalized to F(T0) = W^{-1/2}
        c = bogoliubov.frequency_match(spec, T0)
        F, Fd = bogoliubov.reconstruct(spec, c, T0)
        assert abs(Fd + 1j * c.W * F) <= 1e-12 * c.W * abs(F)
        assert abs(F - c.W**-0.5) <= 1e-10 * abs(F)

    @settings(max_examples=40, deadline=None)
    @given(
        nu=st.floats(min_value=0.02, max_value=3.0),
        w=st.floats(min_value=0.5, max_value=5.0),
        log_tt=st.floats(min_value=-6.0, max_value=3.5),
    )
    def test_coefficient_norm_identity(self, nu, w, log_tt):
        # |c_+|^2 - |c_-|^2 = pi / (w sinh(pi nu)), exactly, at every T0
        # rtol 1e-8: for nu ~ 2-3 the large-argument expansion bottoms out
        # just below 1e-9 near the series/asymptotic switch
        spec = ModeSpec(m=1.0, w=w, K=nu * w)
        c = bogoliubov.frequency_match(
            spec, _t0_from_ttilde(spec, math.exp(log_tt)), rtol=1e-8
        )
        lhs = abs(c.c_plus) ** 2 - abs(c.c_minus) ** 2
        rhs = math.pi / (w * math.sinh(math.pi * nu))
        assert abs(lhs - rhs) <= 1e-8 * rhs

    def test_small_nu_rejected(self):
        with pytest.raises(SmallNuError):
            bogoliubov.frequency_match(ModeSpec(m=1.0, w=1.0, K=1e-8), 0.0)


class TestSqueezing:
    @pytest.mark.parametrize("spec", SCENARIOS, ids=str)
    def test_magnitude_below_one(self, spec):
        for T0 in np.linspace(-8.0, 10.0, 25):
            assert bogoliubov.squeezing_q(spec, float(T0)).q_abs < 1.0

    @pytest.mark.parametrize("spec", SCENARIOS, ids=str)
    def test_inertial_past_limit(self, spec):
        assert bogoliubov.squeezing_q(spec, -8.0).q_abs <= 1e-3

    @pytest.mark.parametrize("spec", SCENARIOS, ids=str)
    def test_uniform_acceleration_plateau(self, spec):
        qa = bogoliubov.squeezing_q(spec, 10.0).q_abs
        assert abs(qa - bogoliubov.asymptotic_q_magnitude(spec.nu)) <= 1e-3

    @pytest.mark.parametrize("spec", SCENARIOS[:2], ids=str)
    @pytest.mark.parametrize("T0", [-2.0, 0.5, 3.0])
    def test_ode_oracle_spot_checks(self, spec, T0):
        qa = bogoliubov.squeezing_q(spec, T0).q_abs
        assert abs(qa - squeezing_q_abs_via_ode(spec, T0)) <= 1e-8


class TestBogoliubovPair:
    @pytest.mark.parametrize("k", [-0.7, 0.2, 1.3])
    @pytest.mark.parametrize("T0", [-2.0, 1.0])
    def test_ratio_matches_q_for_every_k(self, k, T0):
        spec = ModeSpec(m=1.0, w=1.0, K=0.3, k=k)
        c = bogoliubov.frequency_match(spec, T0)
        pair = bogoliubov.alpha_beta(spec, c)
        q = bogoliubov.squeezing_q_from_coeffs(c, spec.nu, T0)
        assert abs(abs(pair.beta / pair.alpha) - q.q_abs) <= 1e-10

    @pytest.mark.parametrize("k", [-0.7, 0.2, 1.3])
    def test_a_coefficient_magnitude(self, k):
        # |A|^2 = e^{pi nu} / (4 pi eps w sinh(pi nu)), using
        # |Gamma(1 + i nu)|^2 = pi nu / sinh(pi nu)
        spec = ModeSpec(m=1.0, w=1.0, K=0.3, k=k)
        A = bogoliubov.a_coefficient(spec)
        nu = spec.nu
        want = math.exp(math.pi * nu) / (
            4.0 * math.pi * spec.epsilon * spec.w * math.sinh(math.pi * nu)
        )
        assert abs(abs(A) ** 2 - want) <= 1e-12 * want
        assert bogoliubov.b_coefficient(spec) == pytest.approx(
            -A * math.exp(-math.pi * nu), rel=1e-14
        )

    def test_alpha_beta_requires_k(self):
        spec = ModeSpec(m=1.0, w=1.0, K=0.3)
        c = bogoliubov.frequency_match(spec, 0.0)
        with pytest.raises(ValueError):
            bogoliubov.alpha_beta(spec, c)


class TestAsymptote:
    def test_plateau_values(self):
        assert bogoliubov.asymptotic_q_magnitude(0.1) == pytest.approx(
            0.7304026910486456, rel=1e-12
        )
        assert bogoliubov.asymptotic_q_magnitude(0.3) == pytest.approx(
            math.exp(-0.3 * math.pi), rel=1e-15
        )
        with pytest.raises(ValueError):
            bogoliubov.asymptotic_q_magnitude(0.0)
