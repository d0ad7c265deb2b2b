"""Instantaneous frequency matching at T = T0 and the squeezing parameter q.

A solution F(T) = c_plus J_{i nu}(T~) + c_minus J_{-i nu}(T~) of the
time equation is instantaneously positive frequency at T0 when
dF/dT(T0) = -i W(T0) F(T0), with W = sqrt(m^2 e^{-2 w T} + K^2).  The
matching coefficients determine the two-mode squeezing parameter q seen by
the accelerated observer; |q| grows from 0 in the inertial past to the
thermal value e^{-pi nu} in the uniformly accelerated future.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import specfun
from .errors import SmallNuError
from .spacetime import ModeSpec

NU_MIN = 1e-6

# Beyond this rescaled argument the double-precision phase z mod 2pi in the
# large-argument expansion is no longer reliable, while the exact limit
# c_minus / c_plus -> -e^{-pi nu} makes q vanish with error O((1+nu^2)/T~).
EARLY_TIME_TTILDE = 1e8


@dataclass(frozen=True)
class FrequencyMatchCoeffs:
    """Matching pair (c_plus, c_minus) on the hypersurface T = T0."""

    c_plus: complex
    c_minus: complex
    W: float
    T0: float

    @property
    def ratio(self) -> complex:
        return self.c_minus / self.c_plus


@dataclass(frozen=True)
class BogoliubovPair:
    alpha: complex
    beta: complex
    k: float


@dataclass(frozen=True)
class SqueezingParam:
    """Complex squeezing parameter; only |q| is physically meaningful."""

    q: complex
    T0: float
    nu: float

    @property
    def q_abs(self) -> float:
        return abs(self.q)


def _bessel_pair(nu: float, z: float, rtol: float, z_switch: float):
    j = specfun.bessel_j_imag(nu, z, rtol=rtol, z_switch=z_switch)
    jp = specfun.bessel_j_imag_deriv(nu, z, rtol=rtol, z_switch=z_switch)
    # J_{-i nu} and its z-derivative are the conjugates (real nu, real z).
    return j, jp, j.conjugate(), jp.conjugate()


def frequency_match(
    spec: ModeSpec,
    T0: float,
    rtol: float = specfun.DEFAULT_RTOL,
    z_switch: float = specfun.DEFAULT_Z_SWITCH,
) -> FrequencyMatchCoeffs:
    """Coefficients making F instantaneously positive frequency at T0.

    c_{+-} = (-+ i nu pi W^{1/2}) / (2 K sinh(pi nu))
             * (Jdot_{-+ i nu}(T~) / W + i J_{-+ i nu}(T~)),
    where the overdot is d/dT, i.e. Jdot = -w T~ J'(T~).
    """
    nu = spec.nu
    if nu < NU_MIN:
        raise SmallNuError(f"nu = {nu} below {NU_MIN}: sinh(pi nu) denominator")
    tt = spec.t_tilde(T0)  # may raise OverflowError for extreme T0
    W = math.hypot(spec.m * math.exp(-spec.w * T0), spec.K)
    j_p, jp_p, j_m, jp_m = _bessel_pair(nu, tt, rtol, z_switch)
    pref = nu * math.pi * math.sqrt(W) / (2.0 * spec.K * math.sinh(math.pi * nu))
    # bracket(order): Jdot/W + i J with Jdot = -w T~ J'
    br_minus = (-spec.w * tt) * jp_m / W + 1j * j_m
    br_plus = (-spec.w * tt) * jp_p / W + 1j * j_p
    c_plus = -1j * pref * br_minus
    c_minus = +1j * pref * br_plus
    return FrequencyMatchCoeffs(c_plus=c_plus, c_minus=c_minus, W=W, T0=T0)


def reconstruct(
    spec: ModeSpec,
    coeffs: FrequencyMatchCoeffs,
    T: float,
    rtol: float = specfun.DEFAULT_RTOL,
    z_switch: float = specfun.DEFAULT_Z_SWITCH,
) -> tuple[complex, complex]:
    """(F, dF/dT) of the matched solution at time T."""
    tt = spec.t_tilde(T)
    j_p, jp_p, j_m, jp_m = _bessel_pair(spec.nu, tt, rtol, z_switch)
    F = coeffs.c_plus * j_p + coeffs.c_minus * j_m
    Fdot = (-spec.w * tt) * (coeffs.c_plus * jp_p + coeffs.c_minus * jp_m)
    return F, Fdot


def squeezing_q(
    spec: ModeSpec,
    T0: float,
    rtol: float = specfun.DEFAULT_RTOL,
    z_switch: float = specfun.DEFAULT_Z_SWITCH,
) -> SqueezingParam:
    """Squeezing parameter q(T0); independent of the Minkowski wavenumber k.

    q = (e^{-pi nu} conj(c_plus) + conj(c_minus))
        / (c_plus + e^{-pi nu} c_minus).

    The relative sign of the c_minus terms makes q vanish in the inertial
    past, where c_minus / c_plus -> -e^{-pi nu}; the overall phase is a
    convention and only |q| enters downstream.  |q| < 1 is guaranteed by
    |c_plus|^2 - |c_minus|^2 = pi / (w sinh(pi nu)) > 0.

    For T~ = (m/w) e^{-w T0} beyond EARLY_TIME_TTILDE the exact inertial
    limit q = 0 is returned: the true |q| is O((1+nu^2)/T~) < 1e-7 there,
    far below the accuracy the downstream entropies can resolve, while the
    oscillatory phase needed by the direct evaluation is no longer
    representable in double precision.
    """
    if spec.nu < NU_MIN:
        raise SmallNuError(f"nu = {spec.nu} below {NU_MIN}: sinh(pi nu) denominator")
    if spec.t_tilde(T0) > EARLY_TIME_TTILDE:
        return SqueezingParam(q=0.0 + 0.0j, T0=T0, nu=spec.nu)
    c = frequency_match(spec, T0, rtol=rtol, z_switch=z_switch)
    return squeezing_q_from_coeffs(c, spec.nu, T0)


def squeezing_q_from_coeffs(
    c: FrequencyMatchCoeffs, nu: float, T0: float
) -> SqueezingParam:
    e = math.exp(-math.pi * nu)
    q = (e * c.c_plus.conjugate() + c.c_minus.conjugate()) / (
        c.c_plus + e * c.c_minus
    )
    return SqueezingParam(q=q, T0=T0, nu=nu)


def a_coefficient(spec: ModeSpec) -> complex:
    """Minkowski-overlap normalization of the Macdonald spatial profile.

    A = -(nu/(eps w))^{1/2} e^{pi nu/2} / (2 Gamma(1 + i nu) sinh(pi nu))
        * ((eps - k)/(2 w))^{i nu},
    with companions B = -A e^{-pi nu} and C = sqrt(pi w / nu).
    """
    nu = spec.nu
    if nu < NU_MIN:
        raise SmallNuError(f"nu = {nu} below {NU_MIN}: sinh(pi nu) denominator")
    eps = spec.epsilon
    gamma = cmath.exp(specfun.log_gamma_complex(1.0 + 1j * nu))
    base = (eps - spec.k) / (2.0 * spec.w)  # > 0 since eps > |k|
    phase = cmath.exp(1j * nu * math.log(base))
    return (
        -math.sqrt(nu / (eps * spec.w))
        * math.exp(0.5 * math.pi * nu)
        / (2.0 * gamma * math.sinh(math.pi * nu))
        * phase
    )


def b_coefficient(spec: ModeSpec) -> complex:
    return -a_coefficient(spec) * math.exp(-math.pi * spec.nu)


def c_normalization(spec: ModeSpec) -> float:
    return math.sqrt(math.pi * spec.w / spec.nu)


def alpha_beta(spec: ModeSpec, coeffs: FrequencyMatchCoeffs) -> BogoliubovPair:
    """Bogoliubov pair against Minkowski modes of wavenumber spec.k.

    alpha = -C A (c_plus + e^{-pi nu} c_minus),
    beta  =  C conj(A) (e^{-pi nu} c_plus + c_minus),
    so |beta/alpha| reproduces |q| for every k.
    """
    if spec.k is None:
        raise ValueError("alpha_beta requires ModeSpec.k")
    nu = spec.nu
    e = math.exp(-math.pi * nu)
    A = a_coefficient(spec)
    C = c_normalization(spec)
    alpha = -C * A * (coeffs.c_plus + e * coeffs.c_minus)
    beta = C * A.conjugate() * (e * coeffs.c_plus + coeffs.c_minus)
    return BogoliubovPair(alpha=alpha, beta=beta, k=spec.k)


def asymptotic_q_magnitude(nu: float) -> float:
    """Late-time (uniform-acceleration) plateau value of |q|."""
    if not (nu > 0.0):
        raise ValueError(f"nu must be > 0, got {nu}")
    return math.exp(-math.pi * nu)
