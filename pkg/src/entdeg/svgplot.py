"""Minimal deterministic SVG line charts for sweep output.

Hand-rolled SVG (no plotting library) so that identical sweep data produces
byte-identical files.  One chart per quantity: x = T0, y = N or I, one
polyline per scenario.  The four built-in scenarios use dotted / solid /
dashed / dash-dotted strokes in that order; extra scenarios cycle through
the same sequence.
"""

from __future__ import annotations

from .entanglement import build_rho_av, choose_n_max, log_negativity, mutual_information
from .sweep import SweepResult, rindler_plateaus, scenario_label

WIDTH, HEIGHT = 640, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 64, 16, 20, 44

# stroke-dasharray per scenario slot: dot, solid, dash, dash-dot
_DASHES = ("1,3", None, "6,4", "8,3,2,3")

_TITLES = {"N": "Logarithmic negativity", "I": "Mutual information"}


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


def _ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _plateau_value(which: str, q_plateau: float, tail_tol: float) -> float:
    rho = build_rho_av(q_plateau, choose_n_max(q_plateau, tail_tol), tail_tol=tail_tol)
    return log_negativity(rho) if which == "N" else mutual_information(rho)


def emit_plot(
    result: SweepResult, which: str, path, compare_rindler: bool | None = None
) -> None:
    """Write one self-contained SVG chart of N or I against T0."""
    if which not in ("N", "I"):
        raise ValueError(f"which must be 'N' or 'I', got {which!r}")
    if compare_rindler is None:
        compare_rindler = result.config.compare_rindler

    cfg = result.config
    ys_all = [
        (p.N if which == "N" else p.I)
        for sc in result.scenarios
        for p in sc.points
    ]
    if not ys_all:
        raise ValueError("sweep produced no points to plot")
    y_lo, y_hi = min(ys_all), max(ys_all)
    if compare_rindler:
        plateaus = [
            _plateau_value(which, qp, cfg.tail_tol)
            for qp in rindler_plateaus(cfg)
        ]
        y_lo = min([y_lo] + plateaus)
        y_hi = max([y_hi] + plateaus)
    pad = 0.05 * (y_hi - y_lo) or 0.5
    y_lo, y_hi = y_lo - pad, y_hi + pad
    x_lo, x_hi = cfg.t0_min, cfg.t0_max

    px_w = WIDTH - MARGIN_L - MARGIN_R
    px_h = HEIGHT - MARGIN_T - MARGIN_B

    def sx(x: float) -> str:
        return _fmt(MARGIN_L + px_w * (x - x_lo) / (x_hi - x_lo))

    def sy(y: float) -> str:
        return _fmt(MARGIN_T + px_h * (y_hi - y) / (y_hi - y_lo))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{px_w}" height="{px_h}" '
        'fill="none" stroke="black" stroke-width="1"/>',
    ]
    for xv in _ticks(x_lo, x_hi):
        x = sx(xv)
        parts.append(
            f'<line x1="{x}" y1="{MARGIN_T + px_h}" x2="{x}" '
            f'y2="{MARGIN_T + px_h + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x}" y="{MARGIN_T + px_h + 18}" font-size="11" '
            f'text-anchor="middle" font-family="sans-serif">{_fmt(xv)}</text>'
        )
    for yv in _ticks(y_lo, y_hi):
        y = sy(yv)
        parts.append(
            f'<line x1="{MARGIN_L - 5}" y1="{y}" x2="{MARGIN_L}" y2="{y}" '
            'stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN_L - 8}" y="{y}" font-size="11" '
            f'text-anchor="end" dominant-baseline="middle" '
            f'font-family="sans-serif">{_fmt(yv)}</text>'
        )
    parts.append(
        f'<text x="{MARGIN_L + px_w // 2}" y="{HEIGHT - 8}" font-size="13" '
        'text-anchor="middle" font-family="sans-serif">T0</text>'
    )
    parts.append(
        f'<text x="{MARGIN_L + px_w // 2}" y="{MARGIN_T - 6}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif">{_TITLES[which]}</text>'
    )

    if compare_rindler:
        for qp in rindler_plateaus(cfg):
            yv = _plateau_value(which, qp, cfg.tail_tol)
            if not (y_lo <= yv <= y_hi):
                continue
            y = sy(yv)
            parts.append(
                f'<line x1="{MARGIN_L}" y1="{y}" x2="{MARGIN_L + px_w}" '
                f'y2="{y}" stroke="gray" stroke-width="0.8" '
                'stroke-dasharray="2,2"/>'
            )

    for i, sc in enumerate(result.scenarios):
        dash = _DASHES[i % len(_DASHES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        pts = " ".join(
            f"{sx(p.T0)},{sy(p.N if which == 'N' else p.I)}" for p in sc.points
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="black" '
            f'stroke-width="1.2"{dash_attr}/>'
        )
        # legend entry
        ly = MARGIN_T + 16 + 16 * i
        lx = MARGIN_L + px_w - 150
        parts.append(
            f'<line x1="{lx}" y1="{ly}" x2="{lx + 28}" y2="{ly}" '
            f'stroke="black" stroke-width="1.2"{dash_attr}/>'
        )
        parts.append(
            f'<text x="{lx + 34}" y="{ly + 4}" font-size="11" '
            f'font-family="sans-serif">{scenario_label(sc.spec)}</text>'
        )

    parts.append("</svg>")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
