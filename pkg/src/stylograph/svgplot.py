"""Self-contained SVG scatter plots (no plotting dependency).

Fixed 800x600 viewbox, tick marks at round numbers, one marker shape and
color per group, legend on the right. Output is a plain string, byte-stable
for identical input.
"""

from __future__ import annotations

import math

WIDTH, HEIGHT = 800, 600
_PLOT = (70, 40, 560, 500)  # x, y, width, height of the data area

_COLORS = ("#1b6ca8", "#c23b22", "#2e8540", "#7d3ca3",
           "#b8860b", "#0f7f7f", "#d2527f", "#555555")

_SHAPES = ("circle", "square", "diamond", "triangle-up",
           "triangle-down", "plus", "cross", "asterisk")


def _nice_step(span: float, target: int = 5) -> float:
    raw = span / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw)) if raw > 0 else 1.0
    for mult in (1.0, 2.0, 5.0, 10.0):
        if mult * mag >= raw:
            return mult * mag
    return 10.0 * mag


def _ticks(lo: float, hi: float):
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(t) < 1e-12 else t)
        t += step
    return ticks


def _marker(shape: str, x: float, y: float, color: str, r: float = 5.0) -> str:
    if shape == "circle":
        return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.1f}" fill="{color}"/>'
    if shape == "square":
        return (f'<rect x="{x - r:.2f}" y="{y - r:.2f}" width="{2 * r:.1f}" '
                f'height="{2 * r:.1f}" fill="{color}"/>')
    if shape == "diamond":
        pts = f"{x:.2f},{y - r:.2f} {x + r:.2f},{y:.2f} {x:.2f},{y + r:.2f} {x - r:.2f},{y:.2f}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    if shape == "triangle-up":
        pts = f"{x:.2f},{y - r:.2f} {x + r:.2f},{y + r:.2f} {x - r:.2f},{y + r:.2f}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    if shape == "triangle-down":
        pts = f"{x:.2f},{y + r:.2f} {x + r:.2f},{y - r:.2f} {x - r:.2f},{y - r:.2f}"
        return f'<polygon points="{pts}" fill="{color}"/>'
    if shape == "plus":
        return (f'<path d="M {x - r:.2f} {y:.2f} H {x + r:.2f} M {x:.2f} {y - r:.2f} '
                f'V {y + r:.2f}" stroke="{color}" stroke-width="2.4" fill="none"/>')
    if shape == "cross":
        return (f'<path d="M {x - r:.2f} {y - r:.2f} L {x + r:.2f} {y + r:.2f} '
                f'M {x - r:.2f} {y + r:.2f} L {x + r:.2f} {y - r:.2f}" '
                f'stroke="{color}" stroke-width="2.4" fill="none"/>')
    # asterisk
    h = 0.71 * r
    return (f'<path d="M {x - r:.2f} {y:.2f} H {x + r:.2f} '
            f'M {x - h:.2f} {y - h:.2f} L {x + h:.2f} {y + h:.2f} '
            f'M {x - h:.2f} {y + h:.2f} L {x + h:.2f} {y - h:.2f}" '
            f'stroke="{color}" stroke-width="2.1" fill="none"/>')


def scatter_svg(points, title: str = "", xlabel: str = "pc1", ylabel: str = "pc2",
                provenance: str = "") -> str:
    """Render (x, y, group) triples; one marker shape and color per group."""
    px, py, pw, ph = _PLOT
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    groups = sorted({p[2] for p in points})
    styles = {
        g: (_SHAPES[i % len(_SHAPES)], _COLORS[i % len(_COLORS)])
        for i, g in enumerate(groups)
    }

    def _range(vals):
        lo, hi = min(vals), max(vals)
        if hi - lo < 1e-12:
            lo, hi = lo - 1.0, hi + 1.0
        pad = 0.06 * (hi - lo)
        return lo - pad, hi + pad

    x0, x1 = _range(xs)
    y0, y1 = _range(ys)

    def sx(v):
        return px + (v - x0) / (x1 - x0) * pw

    def sy(v):
        return py + ph - (v - y0) / (y1 - y0) * ph

    parts = ['<?xml version="1.0" encoding="UTF-8"?>']
    if provenance:
        parts.append(f"<!-- provenance: {provenance} -->")
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif">'
    )
    parts.append(f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>')
    parts.append(
        f'<rect x="{px}" y="{py}" width="{pw}" height="{ph}" fill="none" '
        f'stroke="#333" stroke-width="1"/>'
    )
    if title:
        parts.append(
            f'<text x="{px + pw / 2:.1f}" y="{py - 14}" text-anchor="middle" '
            f'font-size="16">{title}</text>'
        )
    for t in _ticks(x0, x1):
        X = sx(t)
        parts.append(f'<line x1="{X:.2f}" y1="{py + ph}" x2="{X:.2f}" y2="{py + ph + 6}" stroke="#333"/>')
        parts.append(
            f'<text x="{X:.2f}" y="{py + ph + 22}" text-anchor="middle" font-size="12">{t:g}</text>'
        )
    for t in _ticks(y0, y1):
        Y = sy(t)
        parts.append(f'<line x1="{px - 6}" y1="{Y:.2f}" x2="{px}" y2="{Y:.2f}" stroke="#333"/>')
        parts.append(
            f'<text x="{px - 10}" y="{Y + 4:.2f}" text-anchor="end" font-size="12">{t:g}</text>'
        )
    parts.append(
        f'<text x="{px + pw / 2:.1f}" y="{HEIGHT - 16}" text-anchor="middle" font-size="14">{xlabel}</text>'
    )
    parts.append(
        f'<text x="22" y="{py + ph / 2:.1f}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 22 {py + ph / 2:.1f})">{ylabel}</text>'
    )
    for x, y, g in points:
        shape, color = styles[g]
        parts.append(_marker(shape, sx(x), sy(y), color))
    lx, ly = px + pw + 24, py + 12
    for i, g in enumerate(groups):
        shape, color = styles[g]
        parts.append(_marker(shape, lx, ly + 24 * i, color))
        parts.append(
            f'<text x="{lx + 14}" y="{ly + 24 * i + 4:.1f}" font-size="13">{g}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
