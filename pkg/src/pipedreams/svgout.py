"""SVG rendering of low-dimensional vertex figures, for documentation.

The vertex figure of the path root polytope is (n-2)-dimensional, so only
n = 3 (a subdivided segment) and n = 4 (a triangulated polygon) can be
drawn.  Layout works in exact rationals: points get affine coordinates
over a frame chosen from the vertex set, and pixel positions are produced
by integer arithmetic, so output is byte-identical across runs.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import solve_in_span
from .polytopes import Point, vertex_figure_point, vertex_figure_simplices
from .realization import box_edge
from .dreams import staircase_boxes

_SIZE = 520
_MARGIN = 60


def _affine_coordinates(points: list[Point]) -> list[tuple[Fraction, Fraction]]:
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points]
    frame: list[Point] = []
    for d in diffs:
        if any(d):
            if not frame:
                frame.append(d)
            elif len(frame) == 1 and solve_in_span(frame, d) is None:
                frame.append(d)
    if not frame:
        raise ValueError("degenerate point set")
    coords = []
    for d in diffs:
        c = solve_in_span(tuple(frame), d)
        if c is None:
            raise ValueError("points do not lie in a plane")
        u = c[0]
        v = c[1] if len(c) > 1 else Fraction(0)
        coords.append((u, v))
    return coords


def _pixels(coords: list[tuple[Fraction, Fraction]]) -> list[tuple[int, int]]:
    us = [u for u, _ in coords]
    vs = [v for _, v in coords]
    du = (max(us) - min(us)) or Fraction(1)
    dv = (max(vs) - min(vs)) or Fraction(1)
    scale = min(Fraction(_SIZE - 2 * _MARGIN) / du, Fraction(_SIZE - 2 * _MARGIN) / dv)
    out = []
    for u, v in coords:
        x = _MARGIN + (u - min(us)) * scale
        y = _SIZE - _MARGIN - (v - min(vs)) * scale
        out.append((int(x), int(y)))
    return out


def render_vertex_figure(n: int) -> str:
    """The canonical triangulation of the vertex figure with each vertex
    labeled by its staircase box."""
    if n not in (3, 4):
        raise ValueError("SVG output is limited to the 1- and 2-dimensional cases n=3, n=4")
    simplices = vertex_figure_simplices(n)
    points = sorted({p for S in simplices for p in S.vertex_points()})
    index = {p: k for k, p in enumerate(points)}
    pixels = _pixels(_affine_coordinates(points))

    point_box = {}
    for box in staircase_boxes(n):
        i, j = box_edge(box, n)
        point_box[vertex_figure_point(n, i, j)] = box

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for S in simplices:
        pts = " ".join(f"{pixels[index[p]][0]},{pixels[index[p]][1]}" for p in S.vertex_points())
        lines.append(
            f'<polygon points="{pts}" fill="#dbeafe" stroke="#1d4ed8" stroke-width="2"/>'
        )
    for p in points:
        x, y = pixels[index[p]]
        box = point_box.get(p)
        label = f"({box[0]},{box[1]})" if box else "?"
        lines.append(f'<circle cx="{x}" cy="{y}" r="5" fill="#1d4ed8"/>')
        lines.append(
            f'<text x="{x + 8}" y="{y - 8}" font-family="monospace" font-size="14">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
