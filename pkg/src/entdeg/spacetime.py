"""Coordinates, metric, mode functions and the Klein-Gordon inner product.

The accelerated chart (T, X) covers the Minkowski half plane t - x < 0 via

    w (t + x) = 2 sinh(w (T + X)),      w (t - x) = -exp(-w (T - X)),

with conformal metric factor exp(-2 w T) + exp(2 w X).  Mode functions are
separable products of an imaginary-order Bessel factor in T and a Macdonald
factor in X.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import RegionError, WindowError


@dataclass(frozen=True)
class ModeSpec:
    """Physical parameters of one scenario (natural units, c = hbar = 1).

    m: field mass, w: acceleration scale, K: separation constant,
    k: optional Minkowski wavenumber (used only by the Bogoliubov layer).
    """

    m: float
    w: float
    K: float
    k: float | None = None

    def __post_init__(self):
        for name in ("m", "w", "K"):
            v = getattr(self, name)
            if not (v > 0.0 and math.isfinite(v)):
                raise ValueError(f"ModeSpec.{name} must be finite and > 0, got {v}")
        if self.k is not None and not math.isfinite(self.k):
            raise ValueError(f"ModeSpec.k must be finite, got {self.k}")

    @property
    def nu(self) -> float:
        return self.K / self.w

    @property
    def epsilon(self) -> float:
        if self.k is None:
            raise ValueError("ModeSpec.k is not set")
        return math.hypot(self.k, self.m)

    def t_tilde(self, T: float) -> float:
        return (self.m / self.w) * math.exp(-self.w * T)

    def x_tilde(self, X: float) -> float:
        return (self.m / self.w) * math.exp(self.w * X)


@dataclass(frozen=True)
class NuaPoint:
    T: float
    X: float


@dataclass(frozen=True)
class MinkowskiPoint:
    t: float
    x: float


def nua_to_minkowski(p: NuaPoint, w: float) -> MinkowskiPoint:
    """Map accelerated-chart coordinates to inertial (t, x)."""
    if not (w > 0.0):
        raise ValueError(f"w must be > 0, got {w}")
    plus = 2.0 * math.sinh(w * (p.T + p.X)) / w  # t + x
    minus = -math.exp(-w * (p.T - p.X)) / w      # t - x, < 0 always
    return MinkowskiPoint(t=0.5 * (plus + minus), x=0.5 * (plus - minus))


def minkowski_to_nua(p: MinkowskiPoint, w: float) -> NuaPoint:
    """Inverse chart map; only defined on the half plane t - x < 0."""
    if not (w > 0.0):
        raise ValueError(f"w must be > 0, got {w}")
    minus = p.t - p.x
    if minus >= 0.0:
        raise RegionError(f"point (t={p.t}, x={p.x}) has t - x >= 0")
    tmx = -math.log(-w * minus) / w          # T - X
    tpx = math.asinh(0.5 * w * (p.t + p.x)) / w  # T + X
    return NuaPoint(T=0.5 * (tpx + tmx), X=0.5 * (tpx - tmx))


def conformal_factor(p: NuaPoint, w: float) -> float:
    """Metric prefactor exp(-2 w T) + exp(2 w X)."""
    if not (w > 0.0):
        raise ValueError(f"w must be > 0, got {w}")
    return math.exp(-2.0 * w * p.T) + math.exp(2.0 * w * p.X)


def proper_acceleration(T: float, X0: float, w: float) -> float:
    """Acceleration along X = X0: zero in the far past, w e^{-w X0} at late times."""
    if not (w > 0.0):
        raise ValueError(f"w must be > 0, got {w}")
    return w * math.exp(2.0 * w * X0) * conformal_factor(NuaPoint(T, X0), w) ** -1.5


def mode_R_plus(spec: ModeSpec, p: NuaPoint) -> complex:
    """Late-time positive-frequency mode: J_{i nu}(T~) K_{i nu}(X~)."""
    pref = math.sqrt(spec.nu / (math.pi * spec.w))
    jt = specfun.bessel_j_imag(spec.nu, spec.t_tilde(p.T))
    kx = specfun.macdonald_k_imag(spec.nu, spec.x_tilde(p.X))
    return pref * jt * kx


def mode_R_plus_dT(spec: ModeSpec, p: NuaPoint) -> complex:
    """d/dT of mode_R_plus (chain rule dT~/dT = -w T~)."""
    pref = math.sqrt(spec.nu / (math.pi * spec.w))
    tt = spec.t_tilde(p.T)
    jdot = -spec.w * tt * specfun.bessel_j_imag_deriv(spec.nu, tt)
    kx = specfun.macdonald_k_imag(spec.nu, spec.x_tilde(p.X))
    return pref * jdot * kx


def mode_I_plus(spec: ModeSpec, p: NuaPoint) -> complex:
    """Early-time positive-frequency mode: H1_{i nu}(T~) K_{i nu}(X~)."""
    nu = spec.nu
    pref = 0.5 * math.sqrt(-math.expm1(-2.0 * math.pi * nu)) * math.sqrt(
        nu / (math.pi * spec.w)
    )
    ht = specfun.hankel1_imag(nu, spec.t_tilde(p.T))
    kx = specfun.macdonald_k_imag(nu, spec.x_tilde(p.X))
    return pref * ht * kx


def minkowski_mode(spec: ModeSpec, p: MinkowskiPoint, sign: int = +1) -> complex:
    """Plane wave (1/2)(pi eps)^{-1/2} exp(-+ i (eps t - k x))."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    eps = spec.epsilon
    phase = -sign * 1j * (eps * p.t - spec.k * p.x)
    return 0.5 / math.sqrt(math.pi * eps) * complex(np.exp(phase))


@dataclass(frozen=True)
class SampledField:
    """Field samples on one constant-time slice: values and time derivatives.

    ``x`` must be uniformly spaced.  Arrays are frozen after construction.
    """

    x: np.ndarray
    values: np.ndarray
    dvalues_dt: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        v = np.asarray(self.values, dtype=complex)
        dv = np.asarray(self.dvalues_dt, dtype=complex)
        if x.ndim != 1 or x.shape != v.shape or x.shape != dv.shape:
            raise ValueError("x, values and dvalues_dt must be equal-length 1-D arrays")
        if x.size < 3:
            raise ValueError("need at least 3 samples")
        dx = np.diff(x)
        if not np.allclose(dx, dx[0], rtol=1e-9, atol=0.0):
            raise ValueError("grid must be uniformly spaced")
        if not (np.all(np.isfinite(v.view(float))) and np.all(np.isfinite(dv.view(float)))):
            raise ValueError("field samples must be finite")
        for arr, name in ((x, "x"), (v, "values"), (dv, "dvalues_dt")):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def spacing(self) -> float:
        return float(self.x[1] - self.x[0])


def _simpson(y: np.ndarray, dx: float) -> complex:
    n = y.size
    if n % 2 == 0:
        raise ValueError("composite Simpson needs an odd number of samples")
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return complex((dx / 3.0) * np.sum(w * y))


def kg_inner_product(
    A: SampledField, B: SampledField, boundary_tol: float = 1e-6
) -> complex:
    """Klein-Gordon product -i Int dX (A dB*/dT - B* dA/dT) on one slice.

    The conformal factor cancels between the surface measure and the unit
    normal, leaving a flat composite-Simpson quadrature over the window.
    """
    if A.x.shape != B.x.shape or not np.array_equal(A.x, B.x):
        raise ValueError("fields must share the same slice grid")
    for f in (A, B):
        peak = float(np.max(np.abs(f.values)))
        edge = max(abs(f.values[0]), abs(f.values[-1]))
        if peak == 0.0 or edge > boundary_tol * peak:
            raise WindowError(
                f"field magnitude at window edge is {edge:.3e} "
                f"(peak {peak:.3e}); enlarge the window"
            )
    integrand = A.values * np.conj(B.dvalues_dt) - np.conj(B.values) * A.dvalues_dt
    return -1j * _simpson(integrand, A.spacing)
