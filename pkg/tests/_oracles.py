"""Independent re-computations used as cross-checks by the test suite."""

import math

import numpy as np
from scipy.integrate import solve_ivp

from entdeg import specfun
from entdeg.spacetime import ModeSpec


def squeezing_q_abs_via_ode(spec: ModeSpec, T0: float) -> float:
    """|q(T0)| with the Bessel evaluation replaced by direct integration.

    Integrates F'' + (m^2 e^{-2wT} + K^2) F = 0 from the matching data
    (F, F')(T0) = (W^{-1/2}, -i W^{1/2}) to a reference time where the
    rescaled argument is 1, then solves a 2x2 system against the two Bessel
    branches to recover the expansion coefficients.
    """
    W0 = math.hypot(spec.m * math.exp(-spec.w * T0), spec.K)
    T_ref = math.log(spec.m / spec.w) / spec.w

    def rhs(T, y):
        F, Fd = y
        return [Fd, -(spec.m**2 * math.exp(-2.0 * spec.w * T) + spec.K**2) * F]

    sol = solve_ivp(
        rhs,
        (T0, T_ref),
        [complex(W0**-0.5), complex(-1j * W0**0.5)],
        method="DOP853",
        rtol=1e-11,
        atol=1e-13,
    )
    assert sol.success, sol.message
    F, Fd = sol.y[0, -1], sol.y[1, -1]

    tt = spec.t_tilde(T_ref)
    j = specfun.bessel_j_imag(spec.nu, tt)
    jd = -spec.w * tt * specfun.bessel_j_imag_deriv(spec.nu, tt)
    M = np.array([[j, j.conjugate()], [jd, jd.conjugate()]])
    cp, cm = np.linalg.solve(M, np.array([F, Fd]))
    e = math.exp(-math.pi * spec.nu)
    return abs((e * np.conj(cp) + np.conj(cm)) / (cp + e * cm))


def second_derivative(f, x: float, h: float) -> complex:
    """Five-point central stencil, O(h^4)."""
    return (
        -f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)
    ) / (12.0 * h * h)


def first_derivative(f, x: float, h: float) -> complex:
    """Five-point central stencil, O(h^4)."""
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12.0 * h)
