"""Deterministic SVG figures: maximal Dyck paths, shadow structure of a
vertical edge subset, and support regions.

Output is plain text assembled in a fixed order from the input data, so
identical inputs give byte-identical files (golden-testable).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List

from .dyck import DyckPath, shadow
from .greedy import SupportRegion

CELL = 40  # pixels per lattice unit
PAD = 30


def _header(width: float, height: float) -> List[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" '
        f'height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]


def _px(x: float, ymax: float, y: float) -> tuple:
    return (PAD + CELL * x, PAD + CELL * (ymax - y))


def _grid_lines(a1: int, a2: int) -> List[str]:
    out = []
    for x in range(a1 + 1):
        x0, y0 = _px(x, a2, 0)
        x1, y1 = _px(x, a2, a2)
        out.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x1:g}" y2="{y1:g}" '
                   'stroke="#cccccc" stroke-width="1"/>')
    for y in range(a2 + 1):
        x0, y0 = _px(0, a2, y)
        x1, y1 = _px(a1, a2, y)
        out.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x1:g}" y2="{y1:g}" '
                   'stroke="#cccccc" stroke-width="1"/>')
    return out


def _path_polyline(path: DyckPath, color: str = "black", width: int = 3,
                   dash: str = "") -> str:
    pts = " ".join(
        f"{PAD + CELL * x:g},{PAD + CELL * (path.a2 - y):g}"
        for x, y in path.vertices
    )
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return (f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="{width}"{extra}/>')


def render_dyck(a1: int, a2: int) -> str:
    """SVG of the maximal Dyck path with its bounding grid and diagonal."""
    path = DyckPath(a1, a2)
    w = 2 * PAD + CELL * max(a1, 1)
    h = 2 * PAD + CELL * max(a2, 1)
    lines = _header(w, h)
    lines += _grid_lines(a1, a2)
    x0, y0 = _px(0, a2, 0)
    x1, y1 = _px(a1, a2, a2)
    lines.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x1:g}" y2="{y1:g}" '
                 'stroke="#999999" stroke-width="1" stroke-dasharray="4 3"/>')
    lines.append(_path_polyline(path))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_shadows(a1: int, a2: int, b: int, s2: Iterable[int]) -> str:
    """SVG of the path with the chosen verticals, their shadow and the
    remote shadow highlighted."""
    path = DyckPath(a1, a2)
    rep = shadow(path, s2, b)
    s2 = frozenset(s2)
    w = 2 * PAD + CELL * max(a1, 1)
    h = 2 * PAD + CELL * max(a2, 1)
    lines = _header(w, h)
    lines += _grid_lines(a1, a2)
    lines.append(_path_polyline(path, color="#bbbbbb", width=2))

    def edge_line(x0, y0, x1, y1, color, width, dash=""):
        px0, py0 = _px(x0, a2, y0)
        px1, py1 = _px(x1, a2, y1)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        return (f'<line x1="{px0:g}" y1="{py0:g}" x2="{px1:g}" y2="{py1:g}" '
                f'stroke="{color}" stroke-width="{width}"{extra}/>')

    # shadow (solid) and remote shadow (red) horizontal edges
    for i in sorted(rep.sh):
        x = path.left_endpoint(i)
        color = "#d62728" if i in rep.rsh else "#1f77b4"
        lines.append(edge_line(x[0], x[1], x[0] + 1, x[1], color, 4))
    # chosen vertical edges
    for j in sorted(s2):
        top = path.upper_endpoint(j)
        lines.append(edge_line(top[0], top[1] - 1, top[0], top[1], "black", 4))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_support(region: SupportRegion) -> str:
    """SVG of a support region polygon in the (p, q) plane."""
    qmax = max((float(v[1]) for v in region.vertices), default=1.0)
    pmax = max((float(v[0]) for v in region.vertices), default=1.0)
    pmax = max(pmax, 1.0)
    qmax = max(qmax, 1.0)
    w = 2 * PAD + CELL * pmax
    h = 2 * PAD + CELL * qmax
    lines = _header(w, h)
    # axes
    x0, y0 = _px(0, qmax, 0)
    lines.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{PAD + CELL * pmax:g}" '
                 f'y2="{y0:g}" stroke="black" stroke-width="1"/>')
    lines.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x0:g}" y2="{PAD:g}" '
                 'stroke="black" stroke-width="1"/>')
    if len(region.vertices) >= 3:
        pts = " ".join(
            f"{PAD + CELL * float(p):g},{PAD + CELL * (qmax - float(q)):g}"
            for p, q in region.vertices
        )
        dash = ' stroke-dasharray="5 4"' if region.case == 6 else ""
        lines.append(f'<polygon points="{pts}" fill="#1f77b4" '
                     f'fill-opacity="0.25" stroke="#1f77b4" '
                     f'stroke-width="2"{dash}/>')
    else:
        pts = [(_px(float(p), qmax, float(q))) for p, q in region.vertices]
        if len(pts) == 2:
            (ax, ay), (bx, by) = pts
            lines.append(f'<line x1="{ax:g}" y1="{ay:g}" x2="{bx:g}" '
                         f'y2="{by:g}" stroke="#1f77b4" stroke-width="3"/>')
    # lattice points of the region
    for p, q in region.lattice_points():
        cx, cy = _px(p, qmax, q)
        lines.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="3" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def fraction_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
