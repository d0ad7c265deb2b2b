"""Qubit-oscillator density matrix, negativity and mutual information.

The shared Bell state, traced over the causally hidden region, leaves Alice's
qubit entangled with a geometric ladder of Vic's Fock states:

    rho = (1-|q|^2)/2 * sum_n |q|^{2n} rho_n

on the basis |a, n>, a in {0, 1}, 0 <= n <= n_max + 1.  The matrix-numeric
eigensolver path is authoritative for all published numbers; the closed-form
series printed alongside it are evaluated verbatim for cross-check reports
only (the negativity series is known to disagree, see the discrepancy log).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    EigenConvergenceError,
    NegativeEigenvalueError,
    TruncationError,
)

DEFAULT_TAIL_TOL = 1e-14
N_MAX_FLOOR = 8
N_MAX_CAP = 512


def _q_abs(q) -> float:
    """Magnitude of a squeezing parameter given as float, complex or object."""
    q = getattr(q, "q", q)
    qa = abs(q)
    if not (0.0 <= qa < 1.0):
        raise ValueError(f"|q| must lie in [0, 1), got {qa}")
    return float(qa)


def choose_n_max(
    q, tail_tol: float = DEFAULT_TAIL_TOL, floor: int = N_MAX_FLOOR, cap: int = N_MAX_CAP
) -> int:
    """Smallest cutoff with |q|^{2(n+1)} < tail_tol, clamped to [floor, cap]."""
    qa = _q_abs(q)
    if qa == 0.0:
        return floor
    n = int(math.ceil(math.log(tail_tol) / (2.0 * math.log(qa)))) - 1
    return max(floor, min(cap, n))


def squeezed_vacuum_weights(
    q, n_max: int, tail_tol: float = DEFAULT_TAIL_TOL
) -> np.ndarray:
    """Schmidt weights p_n = (1 - |q|^2) |q|^{2n}, n = 0..n_max."""
    qa = _q_abs(q)
    tail = qa ** (2 * (n_max + 1))
    if tail > tail_tol:
        raise TruncationError(
            f"discarded weight {tail:.3e} exceeds tail_tol {tail_tol:.3e}"
        )
    qsq = qa * qa
    return (1.0 - qsq) * qsq ** np.arange(n_max + 1)


@dataclass(frozen=True)
class TruncatedDensityMatrix:
    """Dense Hermitian rho on |a, n>, a in {0,1}, 0 <= n <= n_max+1."""

    n_max: int
    entries: np.ndarray
    tail_bound: float

    @property
    def dim(self) -> int:
        return 2 * (self.n_max + 2)

    def index(self, a: int, n: int) -> int:
        return a * (self.n_max + 2) + n


@dataclass(frozen=True)
class PTSpectrum:
    eigenvalues: np.ndarray  # ascending
    negative_sum: float


def build_rho_av(q, n_max: int, tail_tol: float = DEFAULT_TAIL_TOL) -> TruncatedDensityMatrix:
    """Alice-Vic density matrix; reduces to the Bell projector at q = 0."""
    qa = _q_abs(q)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    tail = qa ** (2 * (n_max + 1))
    if tail > tail_tol:
        raise TruncationError(
            f"discarded weight {tail:.3e} exceeds tail_tol {tail_tol:.3e}"
        )
    qsq = qa * qa
    half = n_max + 2
    rho = np.zeros((2 * half, 2 * half))
    pref = 0.5 * (1.0 - qsq)
    root = math.sqrt(1.0 - qsq)
    for n in range(n_max + 1):
        wn = pref * qsq**n
        cross = wn * root * math.sqrt(n + 1)
        rho[n, n] += wn                                   # |0 n><0 n|
        rho[n, half + n + 1] += cross                     # |0 n><1 n+1|
        rho[half + n + 1, n] += cross
        rho[half + n + 1, half + n + 1] += wn * (1.0 - qsq) * (n + 1)
    return TruncatedDensityMatrix(n_max=n_max, entries=rho, tail_bound=tail)


def partial_transpose(rho: TruncatedDensityMatrix) -> np.ndarray:
    """Transpose Alice's qubit indices: block (a, a') -> block (a', a)."""
    half = rho.n_max + 2
    m = rho.entries
    out = np.empty_like(m)
    for a in range(2):
        for ap in range(2):
            out[ap * half:(ap + 1) * half, a * half:(a + 1) * half] = m[
                a * half:(a + 1) * half, ap * half:(ap + 1) * half
            ]
    return out


def pt_spectrum_numeric(rho: TruncatedDensityMatrix) -> PTSpectrum:
    """Full symmetric eigensolve of the partially transposed matrix."""
    try:
        eig = np.linalg.eigvalsh(partial_transpose(rho))
    except np.linalg.LinAlgError as exc:
        raise EigenConvergenceError(str(exc)) from exc
    return PTSpectrum(eigenvalues=eig, negative_sum=float(eig[eig < 0.0].sum()))


def pt_block_spectrum(q, n_max: int) -> np.ndarray:
    """Analytic partial-transpose spectrum from its exact 2x2 block structure.

    The transposed matrix decouples into blocks on {|1, n>, |0, n+1>} plus
    the singletons |0, 0> and the truncation-edge state |1, n_max+1>; the
    remaining basis vectors carry eigenvalue zero.  Returned ascending, same
    length as the dense spectrum.
    """
    qa = _q_abs(q)
    qsq = qa * qa
    evs = [0.5 * (1.0 - qsq)]  # |0 0>
    for n in range(n_max + 1):
        a = 0.5 * (1.0 - qsq) ** 2 * n * qsq ** (n - 1) if n >= 1 else 0.0
        # the |0, n+1> diagonal weight lies beyond the cutoff when n = n_max
        d = 0.5 * (1.0 - qsq) * qsq ** (n + 1) if n < n_max else 0.0
        b = 0.5 * (1.0 - qsq) * qsq**n * math.sqrt((1.0 - qsq) * (n + 1))
        mid = 0.5 * (a + d)
        rad = math.hypot(0.5 * (a - d), b)
        evs.extend((mid + rad, mid - rad))
    # |1, n_max+1> couples only to the truncated |0, n_max+2> state.
    evs.append(0.5 * (1.0 - qsq) ** 2 * (n_max + 1) * qsq ** n_max)
    dim = 2 * (n_max + 2)
    evs.extend([0.0] * (dim - len(evs)))
    return np.sort(np.asarray(evs))


def pt_eigenvalues_closed_form(q_abs: float, n: int) -> tuple[float, float]:
    """(lambda_+^n, lambda_-^n) of the printed (n, n+1)-block formula.

    Report-only: known to disagree with the direct block construction; the
    numeric spectrum is authoritative.
    """
    qsq = q_abs * q_abs
    s = n * qsq / math.sqrt(1.0 - qsq) + qsq
    z_n = s * s + 4.0 * (1.0 - qsq)
    pre = 0.25 * qsq**n * (1.0 - qsq)
    return pre * (s + math.sqrt(z_n)), pre * (s - math.sqrt(z_n))


def log_negativity(rho: TruncatedDensityMatrix) -> float:
    """log2 of the trace norm of the partial transpose (numeric path)."""
    spec = pt_spectrum_numeric(rho)
    return math.log2(float(np.abs(spec.eigenvalues).sum()))


def log_negativity_closed_form(q_abs: float, n_terms: int) -> float:
    """The printed negativity series, evaluated verbatim (report-only)."""
    qsq = q_abs * q_abs
    total = 0.5 * (1.0 - qsq)
    for n in range(n_terms + 1):
        s = n * qsq / math.sqrt(1.0 - qsq) + qsq
        z_n = s * s + 4.0 * (1.0 - qsq)
        total += 0.25 * qsq**n * (1.0 - qsq) * math.sqrt(z_n)
    return math.log2(total)


def entropy(rho_or_weights, clip_floor: float = -1e-10) -> float:
    """Von Neumann entropy in bits; 0 log 0 = 0.

    Accepts a Hermitian matrix, a TruncatedDensityMatrix, or a 1-D array of
    weights (diagonal case).  Roundoff negatives above ``clip_floor`` are
    clipped to zero; anything below raises NegativeEigenvalueError.
    """
    x = getattr(rho_or_weights, "entries", rho_or_weights)
    x = np.asarray(x, dtype=float)
    if x.ndim == 2:
        try:
            lam = np.linalg.eigvalsh(x)
        except np.linalg.LinAlgError as exc:
            raise EigenConvergenceError(str(exc)) from exc
    else:
        lam = x
    if np.any(lam < clip_floor):
        raise NegativeEigenvalueError(f"eigenvalue {lam.min():.3e} below {clip_floor:.1e}")
    lam = lam[lam > 0.0]
    return float(-(lam * np.log2(lam)).sum())


def reduced_alice(rho: TruncatedDensityMatrix) -> np.ndarray:
    """2x2 qubit state from tracing Vic out; equals I/2 up to the tail."""
    half = rho.n_max + 2
    m = rho.entries
    out = np.empty((2, 2))
    for a in range(2):
        for ap in range(2):
            out[a, ap] = np.trace(m[a * half:(a + 1) * half, ap * half:(ap + 1) * half])
    return out


def reduced_vic(rho: TruncatedDensityMatrix) -> np.ndarray:
    """Vic's oscillator state (exactly diagonal) as a dense matrix."""
    half = rho.n_max + 2
    m = rho.entries
    return m[:half, :half] + m[half:, half:]


def mutual_information(rho: TruncatedDensityMatrix) -> float:
    """S(rho_A) + S(rho_V) - S(rho_AV), all via the symmetric eigensolver."""
    return entropy(reduced_alice(rho)) + entropy(reduced_vic(rho)) - entropy(rho)


def mutual_information_closed_form(q_abs: float, n_terms: int) -> float:
    """Printed mutual-information series; singular at q = 0 (limit is 2)."""
    if q_abs == 0.0:
        raise DomainError("closed-form I is singular at q = 0; the limit is 2")
    qsq = q_abs * q_abs
    total = 1.0 - 0.5 * math.log2(qsq)
    acc = 0.0
    for n in range(n_terms + 1):
        t1 = 1.0 + n * (1.0 - qsq) / qsq
        t2 = 1.0 + (n + 1) * (1.0 - qsq)
        d_n = t1 * math.log2(t1) - t2 * math.log2(t2)
        acc += qsq**n * d_n
    return total - 0.5 * (1.0 - qsq) * acc
