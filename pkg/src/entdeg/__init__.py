"""Entanglement degradation seen by a non-uniformly accelerated observer.

Pipeline: imaginary-order special functions -> accelerated-chart mode
functions -> instantaneous frequency matching and the squeezing parameter
q(T0) -> qubit-oscillator density matrix -> logarithmic negativity and
mutual information sweeps.
"""

from .errors import (
    DomainError,
    EigenConvergenceError,
    EntdegError,
    NegativeEigenvalueError,
    PoleError,
    PrecisionError,
    RegionError,
    SmallNuError,
    SweepFailureError,
    TruncationError,
    UnderflowToZero,
    WindowError,
)
from .spacetime import (
    MinkowskiPoint,
    ModeSpec,
    NuaPoint,
    SampledField,
    conformal_factor,
    kg_inner_product,
    minkowski_to_nua,
    nua_to_minkowski,
    proper_acceleration,
)
from .bogoliubov import (
    BogoliubovPair,
    FrequencyMatchCoeffs,
    SqueezingParam,
    alpha_beta,
    asymptotic_q_magnitude,
    frequency_match,
    squeezing_q,
)
from .entanglement import (
    PTSpectrum,
    TruncatedDensityMatrix,
    build_rho_av,
    choose_n_max,
    entropy,
    log_negativity,
    mutual_information,
    pt_block_spectrum,
    pt_spectrum_numeric,
)
from .sweep import (
    DEFAULT_SCENARIOS,
    EntanglementPoint,
    SweepConfig,
    SweepResult,
    emit_csv,
    emit_json,
    emit_manifest,
    run_sweep,
)
from .svgplot import emit_plot

__version__ = "0.1.0"

__all__ = [
    "BogoliubovPair",
    "DEFAULT_SCENARIOS",
    "DomainError",
    "EigenConvergenceError",
    "EntanglementPoint",
    "EntdegError",
    "FrequencyMatchCoeffs",
    "MinkowskiPoint",
    "ModeSpec",
    "NegativeEigenvalueError",
    "NuaPoint",
    "PTSpectrum",
    "PoleError",
    "PrecisionError",
    "RegionError",
    "SampledField",
    "SmallNuError",
    "SqueezingParam",
    "SweepConfig",
    "SweepFailureError",
    "SweepResult",
    "TruncatedDensityMatrix",
    "TruncationError",
    "UnderflowToZero",
    "WindowError",
    "alpha_beta",
    "asymptotic_q_magnitude",
    "build_rho_av",
    "choose_n_max",
    "conformal_factor",
    "emit_csv",
    "emit_json",
    "emit_manifest",
    "emit_plot",
    "entropy",
    "frequency_match",
    "kg_inner_product",
    "log_negativity",
    "minkowski_to_nua",
    "mutual_information",
    "nua_to_minkowski",
    "proper_acceleration",
    "pt_block_spectrum",
    "pt_spectrum_numeric",
    "run_sweep",
    "squeezing_q",
]
