"""SVG 1.1 rendering of instances and solution certificates.

Geometry is exact upstream; drawing converts to floats and clips unbounded
shapes to the viewport, which affects display only.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .geom import Line, Point

_SIZE = 720.0
_MARGIN = 40.0


class _View:
    def __init__(self, points: Sequence[Point]):
        xs = [p.x for p in points] or [0]
        ys = [p.y for p in points] or [0]
        self.x0, self.x1 = min(xs) - 1, max(xs) + 1
        self.y0, self.y1 = min(ys) - 1, max(ys) + 1
        self.scale = (_SIZE - 2 * _MARGIN) / max(self.x1 - self.x0,
                                                 self.y1 - self.y0, 1)

    def to_screen(self, x: float, y: float) -> Tuple[float, float]:
        sx = _MARGIN + (x - self.x0) * self.scale
        sy = _SIZE - _MARGIN - (y - self.y0) * self.scale
        return sx, sy

    def corners(self) -> List[Tuple[float, float]]:
        return [(self.x0, self.y0), (self.x1, self.y0),
                (self.x1, self.y1), (self.x0, self.y1)]


def _polygon_svg(view: _View, pts: List[Tuple[float, float]],
                 fill: str, opacity: float = 0.3) -> str:
    coords = " ".join("%.2f,%.2f" % view.to_screen(x, y) for x, y in pts)
    return (f'<polygon points="{coords}" fill="{fill}" '
            f'fill-opacity="{opacity}" stroke="{fill}"/>')


def _marker_svg(view: _View, p: Point, color: str, square: bool) -> str:
    sx, sy = view.to_screen(p.x, p.y)
    if square:
        return (f'<rect x="{sx - 4:.2f}" y="{sy - 4:.2f}" width="8" height="8" '
                f'fill="{color}"/>')
    return f'<circle cx="{sx:.2f}" cy="{sy:.2f}" r="4" fill="{color}"/>'


def _document(body: List[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_SIZE:.0f}" height="{_SIZE:.0f}" '
            f'viewBox="0 0 {_SIZE:.0f} {_SIZE:.0f}">')
    return "\n".join([head] + body + ["</svg>"]) + "\n"


def _clip_halfplane(polygon, keep) -> List[Tuple[float, float]]:
    """Sutherland-Hodgman clip of a polygon against keep(x, y) >= 0."""
    out = []
    npts = len(polygon)
    for i in range(npts):
        cur, nxt = polygon[i], polygon[(i + 1) % npts]
        c_in, n_in = keep(*cur) >= 0, keep(*nxt) >= 0
        if c_in:
            out.append(cur)
        if c_in != n_in:
            t = keep(*cur) / (keep(*cur) - keep(*nxt))
            out.append((cur[0] + t * (nxt[0] - cur[0]),
                        cur[1] + t * (nxt[1] - cur[1])))
    return out


def render_mrr(red: Sequence[Point], blue: Sequence[Point],
               direction: Tuple[int, int],
               bounds: Tuple[float, float, float, float]) -> str:
    """Instance points plus one polygon for the (clipped) winning rectangle."""
    view = _View(list(red) + list(blue))
    dx, dy = direction
    norm = float(dx * dx + dy * dy)
    corner_us = []
    corner_vs = []
    for x, y in view.corners():
        corner_us.append(x * dx + y * dy)
        corner_vs.append(-x * dy + y * dx)
    u_lo, u_hi, v_lo, v_hi = bounds
    u_lo = max(float(u_lo), min(corner_us))
    u_hi = min(float(u_hi), max(corner_us))
    v_lo = max(float(v_lo), min(corner_vs))
    v_hi = min(float(v_hi), max(corner_vs))
    poly = []
    for u, v in ((u_lo, v_lo), (u_hi, v_lo), (u_hi, v_hi), (u_lo, v_hi)):
        poly.append(((u * dx - v * dy) / norm, (u * dy + v * dx) / norm))
    body = [_polygon_svg(view, poly, "#2e7d32")]
    body += [_marker_svg(view, p, "#c62828", square=False) for p in red]
    body += [_marker_svg(view, p, "#1565c0", square=True) for p in blue]
    return _document(body)


def render_maxcol(pairs: Sequence[Tuple[Point, Point]],
                  colors: Dict[Point, str],
                  line: Line, side: str) -> str:
    """Colored points plus one polygon for the clipped winning halfplane."""
    pts = [p for pair in pairs for p in pair]
    view = _View(pts)
    sign = 1.0 if side == "above" else -1.0

    def keep(x: float, y: float) -> float:
        return sign * (y - (-line.a * x - line.c) / line.b)

    poly = _clip_halfplane(view.corners(), keep)
    body = []
    if poly:
        body.append(_polygon_svg(view, poly, "#2e7d32"))
    for p in pts:
        red = colors.get(p) == "red"
        body.append(_marker_svg(view, p, "#c62828" if red else "#1565c0",
                                square=not red))
    return _document(body)
