"""SVG rendering of tableaux.

Pure string assembly with fixed two-decimal formatting, so the same tableau
always renders to the same bytes.  Overlays draw the walk structure (paths)
or the step letters (labels) on extended tableaux; both are no-ops on the
square configurations, which carry neither.
"""
from __future__ import annotations

from .grid import Tableau, free_points
from .stats import (
    GAMMA,
    assign_forward_labels,
    assign_nu_labels,
    path_report,
    path_report_odd,
)

OVERLAYS = ("none", "paths", "labels")

_MARGIN = 4
_PATH_COLORS = (("B", "#1f77b4"), ("R", "#d62728"),
                ("Bp", "#17becf"), ("Rp", "#ff7f0e"))
_LETTER = {"beta": "β", "rho": "ρ", "gamma": "γ", "nu": "ν"}


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _star(cx: float, cy: float, cell: int) -> str:
    """Five-pointed star polygon centered on a cell."""
    from math import cos, pi, sin

    outer, inner = 0.38 * cell, 0.16 * cell
    pts = []
    for k in range(10):
        ang = -pi / 2 + k * pi / 5
        rad = outer if k % 2 == 0 else inner
        pts.append(f"{_fmt(cx + rad * cos(ang))},{_fmt(cy + rad * sin(ang))}")
    return f'<polygon points="{" ".join(pts)}" fill="#222"/>'


def render_svg(t: Tableau, overlay: str = "none", cell: int = 24) -> str:
    """Render a tableau to an SVG document string."""
    if overlay not in OVERLAYS:
        raise ValueError(f"overlay must be one of {OVERLAYS}")
    if cell < 8:
        raise ValueError("cell size too small to draw")
    W, H, m = t.width, t.height, _MARGIN
    total_w, total_h = W * cell + 2 * m, H * cell + 2 * m

    def cx(j: int) -> float:
        return m + (j - 0.5) * cell

    def cy(i: int) -> float:
        return m + (H - i + 0.5) * cell

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" '
           f'height="{total_h}" viewBox="0 0 {total_w} {total_h}">',
           f'<rect width="{total_w}" height="{total_h}" fill="#fff"/>']

    if t.kind == "to":
        e = t.empty_row
        out.append(f'<rect x="{m}" y="{_fmt(m + (H - e) * cell)}" '
                   f'width="{W * cell}" height="{cell}" fill="#eee"/>')

    for k in range(W + 1):
        x = m + k * cell
        out.append(f'<line x1="{x}" y1="{m}" x2="{x}" y2="{m + H * cell}" '
                   f'stroke="#999" stroke-width="1"/>')
    for k in range(H + 1):
        y = m + k * cell
        out.append(f'<line x1="{m}" y1="{y}" x2="{m + W * cell}" y2="{y}" '
                   f'stroke="#999" stroke-width="1"/>')

    if t.kind in ("dc", "sdc"):
        N = t.n
        out.append(f'<line x1="{m}" y1="{m + H * cell}" x2="{m + N * cell}" '
                   f'y2="{m + N * cell}" stroke="#555" stroke-width="1.5"/>')
        out.append(f'<line x1="{m}" y1="{m + N * cell}" x2="{m + N * cell}" '
                   f'y2="{m}" stroke="#555" stroke-width="1.5"/>')
    else:
        n = t.n
        out.append(f'<line x1="{m}" y1="{m + H * cell}" x2="{m + n * cell}" '
                   f'y2="{m + (H - n) * cell}" stroke="#555" stroke-width="1.5"/>')
        out.append(f'<line x1="{m}" y1="{m}" x2="{m + W * cell}" '
                   f'y2="{m + W * cell}" stroke="#555" stroke-width="1.5" '
                   f'stroke-dasharray="4 3"/>')

    free = set(free_points(t))
    for j, i in t.points():
        if (j, i) in free:
            out.append(_star(cx(j), cy(i), cell))
        else:
            out.append(f'<circle cx="{_fmt(cx(j))}" cy="{_fmt(cy(i))}" '
                       f'r="{_fmt(0.3 * cell)}" fill="#222"/>')

    if overlay != "none" and t.kind in ("te", "to"):
        out.extend(_overlay_elements(t, overlay, cx, cy, cell))

    out.append("</svg>")
    return "\n".join(out)


def _overlay_elements(t: Tableau, overlay: str, cx, cy, cell: int) -> list[str]:
    out: list[str] = []
    if t.kind == "te":
        rep = path_report(t)
        chains = [(getattr(rep, name), color) for name, color in _PATH_COLORS]
        ringed = rep.G
        labels = assign_forward_labels(t, rep)
    else:
        rep = path_report_odd(t)
        chains = [(rep.V, "#9467bd")]
        ringed = rep.G
        labels = assign_nu_labels(t, rep)

    if overlay == "paths":
        for chain, color in chains:
            if len(chain) > 1:
                pts = " ".join(f"{_fmt(cx(j))},{_fmt(cy(i))}" for j, i in chain)
                out.append(f'<polyline points="{pts}" fill="none" '
                           f'stroke="{color}" stroke-width="2" opacity="0.85"/>')
            for j, i in chain:
                out.append(f'<circle cx="{_fmt(cx(j))}" cy="{_fmt(cy(i))}" '
                           f'r="{_fmt(0.42 * cell)}" fill="none" '
                           f'stroke="{color}" stroke-width="2"/>')
        for j, i in ringed:
            out.append(f'<circle cx="{_fmt(cx(j))}" cy="{_fmt(cy(i))}" '
                       f'r="{_fmt(0.42 * cell)}" fill="none" '
                       f'stroke="#2ca02c" stroke-width="2" stroke-dasharray="3 2"/>')
    else:
        ordered = sorted(labels.items(), key=lambda kv: (kv[0][0], kv[0][1]))
        for (j, i), lab in ordered:
            letter = _LETTER.get(lab, lab)
            out.append(f'<text x="{_fmt(cx(j) + 0.3 * cell)}" '
                       f'y="{_fmt(cy(i) - 0.22 * cell)}" font-size="{_fmt(0.45 * cell)}" '
                       f'fill="#b30059" font-family="sans-serif">{letter}</text>')
        for j, i in ringed:
            if (j, i) not in labels:
                out.append(f'<text x="{_fmt(cx(j) + 0.3 * cell)}" '
                           f'y="{_fmt(cy(i) - 0.22 * cell)}" '
                           f'font-size="{_fmt(0.45 * cell)}" fill="#2ca02c" '
                           f'font-family="sans-serif">{_LETTER[GAMMA]}</text>')
    return out
