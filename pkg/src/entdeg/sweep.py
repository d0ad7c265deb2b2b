"""T0 sweeps over scenarios, with CSV/JSON emission and a run manifest.

A sweep evaluates, for each scenario (m, w, K) and each T0 on a uniform
grid, the squeezing magnitude |q| and the numeric-path logarithmic
negativity N and mutual information I.  Points are computed independently
(optionally on a thread pool) and written back into preallocated slots, so
the emitted files are byte-identical for any worker count.

The closed-form series for N and I are evaluated per point and their
deltas against the numeric path are recorded in the manifest: the I series
agrees to roundoff, the N series is known to be inconsistent and its
nonzero delta is reported, never silently dropped.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .bogoliubov import asymptotic_q_magnitude, squeezing_q
from .entanglement import (
    DEFAULT_TAIL_TOL,
    build_rho_av,
    choose_n_max,
    log_negativity,
    log_negativity_closed_form,
    mutual_information,
    mutual_information_closed_form,
)
from .errors import EntdegError, SweepFailureError
from .spacetime import ModeSpec
from . import specfun

ARTIFACT_VERSION = "0.1.0"

DEFAULT_SCENARIOS = (
    ModeSpec(m=1.0, w=1.0, K=0.1),
    ModeSpec(m=1.0, w=1.0, K=0.3),
    ModeSpec(m=1.0, w=5.0, K=0.1),
    ModeSpec(m=1.0, w=5.0, K=0.3),
)

CSV_HEADER = "scenario,m,w,K,nu,T0,q_abs,N,I"

# |q| below this is too small for the closed-form I series to be meaningful.
_I_SERIES_Q_MIN = 0.01


def scenario_label(spec: ModeSpec) -> str:
    return f"m={spec.m:g},w={spec.w:g},K={spec.K:g}"


@dataclass(frozen=True)
class SweepConfig:
    scenarios: tuple = DEFAULT_SCENARIOS
    t0_min: float = -8.0
    t0_max: float = 10.0
    steps: int = 200
    tail_tol: float = DEFAULT_TAIL_TOL
    spec_tol: float = specfun.DEFAULT_RTOL
    output_path: str | None = None
    format: str = "csv"
    plot: str | None = None  # None | "negativity" | "mutual_info" | "both"
    compare_rindler: bool = False
    threads: int = 1

    def __post_init__(self):
        if len(self.scenarios) == 0:
            raise ValueError("scenario list must not be empty")
        for s in self.scenarios:
            if not isinstance(s, ModeSpec):
                raise ValueError(f"scenarios must be ModeSpec instances, got {s!r}")
        if not (self.t0_min < self.t0_max):
            raise ValueError(f"need t0_min < t0_max, got [{self.t0_min}, {self.t0_max}]")
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not (0.0 < self.tail_tol < 1.0):
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol}")
        if not (0.0 < self.spec_tol < 1.0):
            raise ValueError(f"spec_tol must lie in (0, 1), got {self.spec_tol}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be 'csv' or 'json', got {self.format!r}")
        if self.plot not in (None, "negativity", "mutual_info", "both"):
            raise ValueError(f"unknown plot selection {self.plot!r}")
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")

    def grid(self) -> list[float]:
        span = self.t0_max - self.t0_min
        return [
            self.t0_min + span * i / (self.steps - 1) for i in range(self.steps)
        ]


@dataclass(frozen=True)
class EntanglementPoint:
    """One sweep sample: time, squeezing magnitude, negativity, information."""

    T0: float
    q_abs: float
    N: float
    I: float


@dataclass(frozen=True)
class PointFailure:
    T0: float
    error: str


@dataclass(frozen=True)
class ScenarioResult:
    spec: ModeSpec
    points: tuple  # EntanglementPoint, grid order, failures skipped
    failures: tuple  # PointFailure
    n_max_used: int
    max_abs_delta_I: float  # closed-form vs numeric, |q| >= 0.01 points
    max_abs_delta_N: float  # closed-form vs numeric, all points
    delta_I_points: int


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    scenarios: tuple  # ScenarioResult, config order
    wall_time_s: float


@dataclass(frozen=True)
class _Sample:
    point: EntanglementPoint
    n_max: int
    delta_I: float | None
    delta_N: float


def _eval_point(spec: ModeSpec, T0: float, tail_tol: float, rtol: float) -> _Sample:
    qa = squeezing_q(spec, T0, rtol=rtol).q_abs
    n_max = choose_n_max(qa, tail_tol)
    rho = build_rho_av(qa, n_max, tail_tol=tail_tol)
    N = log_negativity(rho)
    I = mutual_information(rho)
    delta_N = N - log_negativity_closed_form(qa, n_max)
    delta_I = (
        I - mutual_information_closed_form(qa, n_max)
        if qa >= _I_SERIES_Q_MIN
        else None
    )
    return _Sample(
        point=EntanglementPoint(T0=T0, q_abs=qa, N=N, I=I),
        n_max=n_max,
        delta_I=delta_I,
        delta_N=delta_N,
    )


def run_sweep(config: SweepConfig) -> SweepResult:
    """Evaluate every (scenario, T0) cell; deterministic for any thread count.

    Per-point errors are recorded as failures and the point skipped; the
    sweep aborts only when more than 10% of a scenario's grid fails.
    """
    t_start = time.perf_counter()
    grid = config.grid()
    cells = [(si, ti) for si in range(len(config.scenarios)) for ti in range(len(grid))]
    slots: list[list] = [[None] * len(grid) for _ in config.scenarios]

    def work(cell):
        si, ti = cell
        try:
            return _eval_point(
                config.scenarios[si], grid[ti], config.tail_tol, config.spec_tol
            )
        except (EntdegError, OverflowError, ValueError) as exc:
            return PointFailure(T0=grid[ti], error=f"{type(exc).__name__}: {exc}")

    if config.threads == 1:
        results = map(work, cells)
    else:
        pool = ThreadPoolExecutor(max_workers=config.threads)
        try:
            results = pool.map(work, cells)
        finally:
            pool.shutdown(wait=False)
    for (si, ti), res in zip(cells, results):
        slots[si][ti] = res

    scenarios = []
    for si, spec in enumerate(config.scenarios):
        points, failures = [], []
        n_max_used = 0
        max_di, max_dn, di_count = 0.0, 0.0, 0
        for res in slots[si]:
            if isinstance(res, PointFailure):
                failures.append(res)
                continue
            points.append(res.point)
            n_max_used = max(n_max_used, res.n_max)
            max_dn = max(max_dn, abs(res.delta_N))
            if res.delta_I is not None:
                max_di = max(max_di, abs(res.delta_I))
                di_count += 1
        if len(failures) > 0.1 * len(grid):
            detail = "; ".join(f"T0={f.T0:g}: {f.error}" for f in failures[:5])
            raise SweepFailureError(
                f"{len(failures)}/{len(grid)} points failed for "
                f"{scenario_label(spec)} ({detail})"
            )
        scenarios.append(
            ScenarioResult(
                spec=spec,
                points=tuple(points),
                failures=tuple(failures),
                n_max_used=n_max_used,
                max_abs_delta_I=max_di,
                max_abs_delta_N=max_dn,
                delta_I_points=di_count,
            )
        )
    return SweepResult(
        config=config,
        scenarios=tuple(scenarios),
        wall_time_s=time.perf_counter() - t_start,
    )


def _rows(result: SweepResult):
    for sc in result.scenarios:
        label = scenario_label(sc.spec)
        for p in sc.points:
            yield label, sc.spec, p


def emit_csv(result: SweepResult, path) -> None:
    """Full-double-precision CSV, one row per point, grid order."""
    with open(path, "w", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for label, spec, p in _rows(result):
            fh.write(
                f'"{label}",{spec.m!r},{spec.w!r},{spec.K!r},{spec.nu!r},'
                f"{p.T0!r},{p.q_abs!r},{p.N!r},{p.I!r}\n"
            )


def manifest_dict(result: SweepResult, include_wall_time: bool = True) -> dict:
    cfg = result.config
    out = {
        "artifact_version": ARTIFACT_VERSION,
        "config": {
            "scenarios": [
                {"m": s.m, "w": s.w, "K": s.K} for s in cfg.scenarios
            ],
            "t0_min": cfg.t0_min,
            "t0_max": cfg.t0_max,
            "steps": cfg.steps,
            "tail_tol": cfg.tail_tol,
            "spec_tol": cfg.spec_tol,
            "format": cfg.format,
            "plot": cfg.plot,
            "compare_rindler": cfg.compare_rindler,
        },
        "scenarios": [
            {
                "scenario": scenario_label(sc.spec),
                "n_max_used": sc.n_max_used,
                "points": len(sc.points),
                "failures": [
                    {"T0": f.T0, "error": f.error} for f in sc.failures
                ],
                "discrepancy": {
                    "max_abs_delta_I_closed_form": sc.max_abs_delta_I,
                    "max_abs_delta_N_closed_form": sc.max_abs_delta_N,
                    "delta_I_points_compared": sc.delta_I_points,
                    "note": (
                        "numeric eigensolver path is authoritative; the "
                        "closed-form negativity series is inconsistent "
                        "(fails its own q -> 0 limit) and its delta is "
                        "reported here by design"
                    ),
                },
            }
            for sc in result.scenarios
        ],
    }
    if include_wall_time:
        out["wall_time_s"] = result.wall_time_s
    return out


def emit_json(result: SweepResult, path) -> None:
    """Point array plus manifest; wall time excluded to keep bytes reproducible."""
    doc = {
        "points": [
            {
                "scenario": label,
                "m": spec.m,
                "w": spec.w,
                "K": spec.K,
                "nu": spec.nu,
                "T0": p.T0,
                "q_abs": p.q_abs,
                "N": p.N,
                "I": p.I,
            }
            for label, spec, p in _rows(result)
        ],
        "manifest": manifest_dict(result, include_wall_time=False),
    }
    with open(path, "w", newline="\n") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def emit_manifest(result: SweepResult, path) -> None:
    """Sidecar manifest (includes wall time, hence not byte-reproducible)."""
    with open(path, "w", newline="\n") as fh:
        json.dump(manifest_dict(result, include_wall_time=True), fh, indent=2, sort_keys=True)
        fh.write("\n")


def rindler_plateaus(config: SweepConfig) -> list[float]:
    """Late-time |q| asymptote e^{-pi K / w} per scenario, config order."""
    return [asymptotic_q_magnitude(s.nu) for s in config.scenarios]
