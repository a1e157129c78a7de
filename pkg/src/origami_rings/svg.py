"""Minimal SVG scatter plot of exact points."""

from __future__ import annotations

from typing import Iterable
from xml.sax.saxutils import escape

from .cyclotomic import CycNum, to_complex

DEFAULT_RADIUS = 6.0


def _g(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def render_svg(points: Iterable[CycNum], *, radius: float = DEFAULT_RADIUS,
               title: str = "", size: int = 600) -> str:
    """One circle per point, in user units equal to the complex coordinates.

    The drawing is wrapped in ``scale(1,-1)`` so the y axis points up; the
    viewBox is the bounding box of the points clamped to ``radius``.
    """
    coords = [to_complex(z) for z in points]
    if coords:
        lo_x = max(-radius, min(c.real for c in coords))
        hi_x = min(radius, max(c.real for c in coords))
        lo_y = max(-radius, min(c.imag for c in coords))
        hi_y = min(radius, max(c.imag for c in coords))
    else:
        lo_x = lo_y = -1.0
        hi_x = hi_y = 1.0
    pad = 0.05 * max(hi_x - lo_x, hi_y - lo_y, 1.0)
    lo_x, lo_y, hi_x, hi_y = lo_x - pad, lo_y - pad, hi_x + pad, hi_y + pad
    w, h = hi_x - lo_x, hi_y - lo_y
    dot = 0.006 * max(w, h)
    stroke = dot / 4

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{round(size * h / w)}" '
        f'viewBox="{_g(lo_x)} {_g(-hi_y)} {_g(w)} {_g(h)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<rect x="%s" y="%s" width="%s" height="%s" fill="white"/>'
               % (_g(lo_x), _g(-hi_y), _g(w), _g(h)))
    out.append('<g transform="scale(1,-1)">')
    out.append(f'<line x1="{_g(lo_x)}" y1="0" x2="{_g(hi_x)}" y2="0" stroke="#bbb" stroke-width="{_g(stroke)}"/>')
    out.append(f'<line x1="0" y1="{_g(lo_y)}" x2="0" y2="{_g(hi_y)}" stroke="#bbb" stroke-width="{_g(stroke)}"/>')
    out.append('<g class="points" fill="#1f4e79">')
    for c in coords:
        out.append(f'<circle cx="{_g(c.real)}" cy="{_g(c.imag)}" r="{_g(dot)}"/>')
    out.append("</g>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
