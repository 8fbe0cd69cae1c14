"""Minimal SVG rendering of point sets, graphs and line plots."""

from __future__ import annotations

import numpy as np

from .geom import Diamond


def _frame(coords: np.ndarray, size: float, margin: float):
    lo = coords.min(axis=0)
    span = float(max(np.ptp(coords, axis=0).max(), 1e-12))
    scale = (size - 2 * margin) / span

    def to_px(p):
        return margin + (p[0] - lo[0]) * scale, size - margin - (p[1] - lo[1]) * scale

    return to_px


def render_graph_svg(coords, edges=(), diamonds=(), size: float = 600.0, radius: float = 2.0) -> str:
    coords = np.asarray(coords, dtype=float).reshape(-1, 2)
    extra = [np.asarray(d.corners()) for d in diamonds]
    to_px = _frame(np.vstack([coords, *extra]) if extra else coords, size, 20.0)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:g}" height="{size:g}" '
        f'viewBox="0 0 {size:g} {size:g}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for d in diamonds:
        pts = " ".join("%.3f,%.3f" % to_px(c) for c in d.corners())
        out.append(f'<polygon points="{pts}" fill="none" stroke="#c33" stroke-width="0.5"/>')
    for i, j in edges:
        (x1, y1), (x2, y2) = to_px(coords[i]), to_px(coords[j])
        out.append(f'<polyline points="{x1:.3f},{y1:.3f} {x2:.3f},{y2:.3f}" stroke="black" stroke-width="1" fill="none"/>')
    for p in coords:
        x, y = to_px(p)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{radius:g}" fill="#236"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def fractal_diamonds(vertices, theta: float, level: int) -> list[Diamond]:
    """Diamonds around the ``5**level`` blocks of a fractal path."""
    verts = np.asarray(vertices, dtype=float)
    block = (len(verts) - 1) // 5**level
    if block < 1:
        return []
    return [Diamond(verts[s], verts[s + block], theta) for s in range(0, len(verts) - 1, block)]


def render_curve_svg(xs, ys, size: float = 480.0, xlabel: str = "", ylabel: str = "") -> str:
    xs, ys = np.asarray(xs, float), np.asarray(ys, float)
    m = 40.0
    w = size - 2 * m
    x0, x1 = xs.min(), xs.max()
    y0, y1 = min(0.0, ys.min()), max(ys.max(), 1e-12)
    px = m + (xs - x0) / max(x1 - x0, 1e-12) * w
    py = size - m - (ys - y0) / (y1 - y0) * w
    pts = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(px, py))
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:g}" height="{size:g}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{m}" y1="{size - m}" x2="{size - m}" y2="{size - m}" stroke="black"/>',
        f'<line x1="{m}" y1="{m}" x2="{m}" y2="{size - m}" stroke="black"/>',
        f'<text x="{size / 2:g}" y="{size - 8:g}" text-anchor="middle">{xlabel}</text>',
        f'<text x="12" y="{size / 2:g}" transform="rotate(-90 12 {size / 2:g})" text-anchor="middle">{ylabel}</text>',
        f'<text x="{m - 4:g}" y="{size - m:g}" text-anchor="end" font-size="10">{y0:g}</text>',
        f'<text x="{m - 4:g}" y="{m + 4:g}" text-anchor="end" font-size="10">{y1:.3g}</text>',
        f'<polyline points="{pts}" fill="none" stroke="#236" stroke-width="2"/>',
        "</svg>",
    ]) + "\n"
