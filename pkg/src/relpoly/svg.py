"""Static SVG picture of the relator walk, its hull and the marked polytope.

The polytope is drawn shifted by ``(1/2, 1/2)`` so that it sits inside the
walk's hull as in the usual picture; the JSON report keeps integer
coordinates.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .geometry import MarkedPolytope, convex_hull
from .pipeline import PolytopeResult
from .words import prefix_images

UNIT = 40
MARGIN = 30


def render(res: PolytopeResult) -> str:
    p = res.presentation
    if res.info.b1 == 2:
        walk = prefix_images(p.relator) + [(0, 0)]
        poly = res.routes["walk"]
        shift = Fraction(1, 2)
    else:
        walk = []
        poly = res.polytope
        shift = Fraction(0)
    pts = [(Fraction(x), Fraction(y)) for x, y in walk]
    mpts = [(x + shift, y + shift) for x, y in poly.vertices]
    allpts = pts + mpts
    xmin = min(x for x, _ in allpts)
    xmax = max(x for x, _ in allpts)
    ymin = min(y for _, y in allpts)
    ymax = max(y for _, y in allpts)
    width = int((xmax - xmin) * UNIT) + 2 * MARGIN
    height = int((ymax - ymin) * UNIT) + 2 * MARGIN + 20

    def sx(x):
        return float((x - xmin) * UNIT + MARGIN)

    def sy(y):
        return float((ymax - y) * UNIT + MARGIN)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f"<title>{escape(p.format())}</title>",
    ]
    # lattice
    for x in range(int(xmin), int(xmax) + 1):
        out.append(
            f'<line x1="{sx(x)}" y1="{sy(ymin)}" x2="{sx(x)}" y2="{sy(ymax)}" '
            'stroke="#ddd" stroke-width="1"/>'
        )
    for y in range(int(ymin), int(ymax) + 1):
        out.append(
            f'<line x1="{sx(xmin)}" y1="{sy(y)}" x2="{sx(xmax)}" y2="{sy(y)}" '
            'stroke="#ddd" stroke-width="1"/>'
        )
    if walk:
        hull = convex_hull(walk)
        out.append(_polygon(hull, sx, sy, 'fill="none" stroke="#888" stroke-dasharray="4 3"'))
        path = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        out.append(f'<polyline points="{path}" fill="none" stroke="#1f5fa8" stroke-width="2"/>')
    out.append(_polygon(mpts, sx, sy, 'fill="#f2c14e" fill-opacity="0.5" stroke="#a06800"'))
    for (x, y), m in zip(mpts, poly.marked):
        fill = "#000" if m else "#fff"
        out.append(
            f'<circle cx="{sx(x)}" cy="{sy(y)}" r="5" fill="{fill}" stroke="#000" stroke-width="1.5"/>'
        )
    label = "polytope drawn at (+1/2,+1/2); JSON uses integer coordinates" if walk else "b1 = 1"
    out.append(
        f'<text x="{MARGIN}" y="{height - 8}" font-family="sans-serif" font-size="11">{label}</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _polygon(pts, sx, sy, style: str) -> str:
    coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
    if len(pts) <= 2:
        return f'<polyline points="{coords}" {style} stroke-width="2"/>'
    return f'<polygon points="{coords}" {style} stroke-width="2"/>'


def write(res: PolytopeResult, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render(res))


__all__ = ["render", "write", "MarkedPolytope"]
