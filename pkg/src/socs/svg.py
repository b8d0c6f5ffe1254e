"""Minimal SVG rendering of a polygon path."""
from __future__ import annotations

from typing import Optional
from xml.sax.saxutils import escape

from .geometry import PolygonPath, PolygonReport

MARGIN = 0.05


def render_svg(path: PolygonPath, title: str = "", report: Optional[PolygonReport] = None) -> str:
    """Closed path with ``O`` marked; y is flipped so "up" renders upward."""
    xs = [p[0] for p in path.vertices]
    ys = [0.0 - p[1] for p in path.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = MARGIN * span
    vb = (x0 - pad, y0 - pad, x1 - x0 + 2 * pad, y1 - y0 + 2 * pad)
    stroke = span / 400
    d = "M " + " L ".join(f"{x:.9g},{y:.9g}" for x, y in zip(xs, ys)) + " Z"
    ox, oy = xs[path.origin_index], ys[path.origin_index]

    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    if report is not None:
        body = "\n".join(f"  {k}: {v}" for k, v in report.as_dict().items())
        lines.append(f"<!-- polygon report\n{escape(body)}\n-->")
    lines += [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{vb[0]:.9g} {vb[1]:.9g} {vb[2]:.9g} {vb[3]:.9g}">',
        f"  <title>{escape(title)}</title>",
        f'  <path d="{d}" fill="none" stroke="black" stroke-width="{stroke:.6g}" stroke-linejoin="round"/>',
        f'  <circle cx="{ox:.9g}" cy="{oy:.9g}" r="{3 * stroke:.6g}" fill="red"/>',
        f'  <text x="{ox:.9g}" y="{oy:.9g}" font-size="{12 * stroke:.6g}" dx="{4 * stroke:.6g}">O</text>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
