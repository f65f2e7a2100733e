"""SVG picture of a rank-3 affine root system under a Coxeter element.

Positive roots are pushed to the unit sphere and projected
stereographically from the direction of ``delta``, using the standard
inner product on simple-root coordinates. This is a drawing convention
only; ``K`` itself is degenerate and gives no such metric.
"""
from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from . import _linalg as la
from .cartan import CartanData, affine_frame
from .errors import RankNot3
from .orbits import _multiple_of
from .rootspace import positive_real_roots
from .spectral import gamma_c, uc_basis
from .weyl import CoxeterWord

Point = Tuple[float, float]


def _unit(v: Sequence) -> Tuple[float, float, float]:
    f = [float(x) for x in v]
    r = math.sqrt(sum(x * x for x in f))
    return tuple(x / r for x in f)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b) -> float:
    return sum(x * y for x, y in zip(a, b))


class Projector:
    """Stereographic projection of the unit sphere from ``pole`` onto ``pole``-perp."""

    def __init__(self, pole: Sequence):
        self.u = _unit(pole)
        helper = (1.0, 0.0, 0.0) if abs(self.u[0]) < 0.9 else (0.0, 1.0, 0.0)
        self.e1 = _unit(_cross(self.u, helper))
        self.e2 = _cross(self.u, self.e1)

    def __call__(self, v: Sequence) -> Optional[Point]:
        x = _unit(v)
        denom = 1.0 - _dot(x, self.u)
        if denom < 1e-12:
            return None
        return (_dot(x, self.e1) / denom, _dot(x, self.e2) / denom)

    def great_circle(self, a: Sequence, b: Sequence, steps: int = 720) -> List[Point]:
        a, b = _unit(a), _unit(b)
        # orthonormalize b against a
        b = tuple(y - _dot(a, b) * x for x, y in zip(a, b))
        b = _unit(b)
        out = []
        for t in range(steps + 1):
            ang = 2 * math.pi * t / steps
            p = self(tuple(math.cos(ang) * x + math.sin(ang) * y for x, y in zip(a, b)))
            if p is not None:
                out.append(p)
        return out


def plot_data(cd: CartanData, c: CoxeterWord, H: int = 9, aff: Optional[int] = None) -> dict:
    """Projected coordinates of everything that goes into the picture."""
    if cd.n != 3:
        raise RankNot3(f"plotting needs rank 3, got {cd.n}")
    frame = affine_frame(cd, aff)
    gd = gamma_c(cd, frame, c)
    proj = Projector(frame.delta)
    roots = sorted(r for r in positive_real_roots(cd, H) if _multiple_of(r, frame.delta) is None)
    points = {r: proj(r) for r in roots}
    arrows = []
    for r in roots:
        img = c.apply(r)
        if img in points and img != r:
            arrows.append((r, img))
    # U_c contains delta, so it projects to a line; V_fin misses delta and gives a circle
    ub = [tuple(x) for x in uc_basis(gd.phi)]
    other = next(b for b in ub if la.primitive(b) != frame.delta)
    uc_points = proj.great_circle(frame.delta, other)
    fin = [tuple(1 if j == i - 1 else 0 for j in range(3)) for i in frame.fin_indices]
    fin_points = proj.great_circle(fin[0], fin[1])
    return {
        "points": points,
        "finite": {r for r in roots if gd.phi(r) == 0},
        "arrows": arrows,
        "uc_line": uc_points,
        "uc_anchors": (proj(other), proj(tuple(-x for x in other))),
        "fin_circle": fin_points,
    }


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_svg(cd: CartanData, c: CoxeterWord, H: int = 9, aff: Optional[int] = None, size: int = 640) -> str:
    data = plot_data(cd, c, H, aff)
    pts = [p for p in data["points"].values() if p is not None]
    span = max(max(abs(x), abs(y)) for x, y in pts) * 1.15 if pts else 1.0
    scale = size / (2 * span)

    def tx(p: Point) -> Tuple[str, str]:
        return _fmt(size / 2 + p[0] * scale), _fmt(size / 2 - p[1] * scale)

    def polyline(points, cls):
        inside = [p for p in points if abs(p[0]) <= 2 * span and abs(p[1]) <= 2 * span]
        coords = " ".join(",".join(tx(p)) for p in inside)
        return f'<polyline class="{cls}" points="{coords}" fill="none"/>'

    title = escape(f"{cd.label or 'matrix'}, c = {list(c.order)}, height <= {H}")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{title}</title>",
        "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" orient=\"auto\">"
        "<path d=\"M0,0 L6,3 L0,6 z\" fill=\"#555\"/></marker></defs>",
        "<style>.uc{stroke:#e0b000;stroke-width:2}.fin{stroke:#4a7;stroke-width:1;stroke-dasharray:4 3}"
        ".arrow{stroke:#555;stroke-width:0.8}.root{fill:#236}.froot{fill:#c30}</style>",
        f'<rect width="{size}" height="{size}" fill="white"/>',
        polyline(data["fin_circle"], "fin"),
        polyline(data["uc_line"], "uc"),
    ]
    for a, b in data["arrows"]:
        pa, pb = data["points"][a], data["points"][b]
        if pa is None or pb is None:
            continue
        (x1, y1), (x2, y2) = tx(pa), tx(pb)
        out.append(f'<line class="arrow" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" marker-end="url(#head)"/>')
    for r, p in data["points"].items():
        if p is None:
            continue
        x, y = tx(p)
        cls = "froot" if r in data["finite"] else "root"
        out.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="3"><title>{list(r)}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def distance_to_uc_line(data: dict, p: Point) -> float:
    """Distance from a projected point to the rendered U_c line."""
    (x1, y1), (x2, y2) = data["uc_anchors"]
    dx, dy = x2 - x1, y2 - y1
    return abs(dy * (p[0] - x1) - dx * (p[1] - y1)) / math.hypot(dx, dy)
