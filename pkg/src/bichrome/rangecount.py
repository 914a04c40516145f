"""Counting red points in closed rectangles of arbitrary orientation.

Two interchangeable backends answer count_closed bit-for-bit identically:
the mandatory naive scan (the correctness oracle) and an optional
partition-tree backend whose per-query cost is sublinear in n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .geom import Direction, Point

INF = float("inf")
NEG_INF = float("-inf")


@dataclass(frozen=True)
class OrientedRect:
    """Rectangle in the frame of `dir`, sides possibly unbounded.

    Bounds are in the same unnormalized units as frame_coords(., dir);
    finite bounds may be int or Fraction, unbounded sides are +-inf floats.
    """

    dir: Direction
    u_lo: object
    u_hi: object
    v_lo: object
    v_hi: object

    def __post_init__(self):
        if not (self.u_lo < self.u_hi and self.v_lo < self.v_hi):
            raise ValueError(f"empty rectangle interior: {self}")

    def bounds(self) -> Tuple:
        return (self.u_lo, self.u_hi, self.v_lo, self.v_hi)


def axis_rect(u_lo, u_hi, v_lo, v_hi) -> OrientedRect:
    return OrientedRect(Direction(1, 0), u_lo, u_hi, v_lo, v_hi)


def contains_closed(rect: OrientedRect, p: Point) -> bool:
    dx, dy = rect.dir.dx, rect.dir.dy
    u = p.x * dx + p.y * dy
    v = -p.x * dy + p.y * dx
    return (rect.u_lo <= u <= rect.u_hi) and (rect.v_lo <= v <= rect.v_hi)


def count_open_interior(points: List[Point], rect: OrientedRect) -> int:
    """Points strictly inside rect; used to certify blue-free interiors."""
    dx, dy = rect.dir.dx, rect.dir.dy
    n = 0
    for p in points:
        u = p.x * dx + p.y * dy
        v = -p.x * dy + p.y * dx
        if rect.u_lo < u < rect.u_hi and rect.v_lo < v < rect.v_hi:
            n += 1
    return n


class NaiveCounter:
    """O(n) per query; the reference backend every other backend must match."""

    def __init__(self, points: List[Point]):
        self._pts = [(p.x, p.y) for p in points]

    def count_closed(self, rect: OrientedRect) -> int:
        dx, dy = rect.dir.dx, rect.dir.dy
        u_lo, u_hi, v_lo, v_hi = rect.bounds()
        n = 0
        for x, y in self._pts:
            u = x * dx + y * dy
            if u < u_lo or u > u_hi:
                continue
            v = -x * dy + y * dx
            if v_lo <= v <= v_hi:
                n += 1
        return n


class _KdNode:
    __slots__ = ("xmin", "xmax", "ymin", "ymax", "count", "left", "right", "pts")

    def __init__(self, pts, depth):
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        self.xmin, self.xmax = min(xs), max(xs)
        self.ymin, self.ymax = min(ys), max(ys)
        self.count = len(pts)
        if len(pts) <= 8:
            self.pts = pts
            self.left = self.right = None
            return
        self.pts = None
        axis = depth % 2
        pts = sorted(pts, key=lambda p: p[axis])
        mid = len(pts) // 2
        self.left = _KdNode(pts[:mid], depth + 1)
        self.right = _KdNode(pts[mid:], depth + 1)


class KdCounter:
    """Balanced kd-tree: nodes fully inside/outside a query are resolved from
    exact frame-coordinate extremes of their cells, so each query touches a
    sublinear number of nodes and agrees with NaiveCounter exactly."""

    def __init__(self, points: List[Point]):
        pts = [(p.x, p.y) for p in points]
        self._root = _KdNode(pts, 0) if pts else None

    def count_closed(self, rect: OrientedRect) -> int:
        if self._root is None:
            return 0
        dx, dy = rect.dir.dx, rect.dir.dy
        u_lo, u_hi, v_lo, v_hi = rect.bounds()
        total = 0
        stack = [self._root]
        while stack:
            node = stack.pop()
            # Extremes of u = dx*x + dy*y and v = -dy*x + dx*y over the cell.
            if dx >= 0:
                u_min, u_max = dx * node.xmin, dx * node.xmax
            else:
                u_min, u_max = dx * node.xmax, dx * node.xmin
            if dy >= 0:
                u_min += dy * node.ymin
                u_max += dy * node.ymax
            else:
                u_min += dy * node.ymax
                u_max += dy * node.ymin
            if u_max < u_lo or u_min > u_hi:
                continue
            if -dy >= 0:
                v_min, v_max = -dy * node.xmin, -dy * node.xmax
            else:
                v_min, v_max = -dy * node.xmax, -dy * node.xmin
            if dx >= 0:
                v_min += dx * node.ymin
                v_max += dx * node.ymax
            else:
                v_min += dx * node.ymax
                v_max += dx * node.ymin
            if v_max < v_lo or v_min > v_hi:
                continue
            if (u_lo <= u_min and u_max <= u_hi
                    and v_lo <= v_min and v_max <= v_hi):
                total += node.count
                continue
            if node.pts is not None:
                for x, y in node.pts:
                    u = x * dx + y * dy
                    v = -x * dy + y * dx
                    if u_lo <= u <= u_hi and v_lo <= v <= v_hi:
                        total += 1
                continue
            stack.append(node.left)
            stack.append(node.right)
        return total


def build_naive(points: List[Point]) -> NaiveCounter:
    return NaiveCounter(points)


def build_accelerated(points: List[Point]) -> KdCounter:
    return KdCounter(points)


def build_counter(points: List[Point], backend: str = "naive"):
    """Backend selection mirrors the CLI flag: 'naive' or 'accel'."""
    if backend == "naive":
        return build_naive(points)
    if backend == "accel":
        return build_accelerated(points)
    raise ValueError(f"unknown counter backend {backend!r}")
