"""Axis-parallel maximum red rectangle.

Enumerates every maximal axis rectangle whose open interior avoids the blue
set (each side passes through a blue point or lies on the expanded clip box)
and returns the candidate holding the most red points.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import List, Tuple

from .geom import GeneralPositionError, Point, check_coordinate_range
from .rangecount import OrientedRect, axis_rect, count_open_interior


class EmptyInstanceError(Exception):
    pass


@dataclass(frozen=True)
class AxisInstance:
    red: Tuple[Point, ...]
    blue: Tuple[Point, ...]
    clip: Tuple[int, int, int, int]  # (x_lo, x_hi, y_lo, y_hi)


def clip_box(points: List[Point]) -> Tuple[int, int, int, int]:
    """Bounding box expanded by one unit; stands in for unbounded sides."""
    if not points:
        raise EmptyInstanceError("no points to clip against")
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return (min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1)


def validate_axis_instance(red: List[Point], blue: List[Point]) -> AxisInstance:
    """Distinct points everywhere; distinct x and y among blue points.

    Blue coordinate ties are the only ties that break maximal-rectangle
    uniqueness, so red ties are allowed (they only ever get counted).
    """
    pts = list(red) + list(blue)
    if not pts:
        raise EmptyInstanceError("axis instance has no points")
    check_coordinate_range(pts)
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("duplicate points")
    if len({b.x for b in blue}) != len(blue) or len({b.y for b in blue}) != len(blue):
        raise GeneralPositionError("blue points share an x or y coordinate")
    return AxisInstance(tuple(red), tuple(blue), clip_box(pts))


def enumerate_axis_candidates(blue: List[Point], clip) -> List[OrientedRect]:
    """All maximal blue-empty axis rectangles within the clip box.

    Three disjoint families cover the set: left side through a blue point
    (right/top/bottom shrink during a rightward scan), left side on the clip
    box (right through a blue point), and full-width horizontal strips.
    """
    x_lo, x_hi, y_lo, y_hi = clip
    if len({b.x for b in blue}) != len(blue) or len({b.y for b in blue}) != len(blue):
        raise GeneralPositionError("blue points share an x or y coordinate")
    by_x = sorted(blue, key=lambda p: p.x)
    rects = []

    # Left side through a blue point.
    for i, p in enumerate(by_x):
        top, bot = y_hi, y_lo
        for q in by_x[i + 1:]:
            if bot < q.y < top:
                rects.append(axis_rect(p.x, q.x, bot, top))
                if q.y > p.y:
                    top = q.y
                else:
                    bot = q.y
        rects.append(axis_rect(p.x, x_hi, bot, top))

    # Left side on the clip box, right side through a blue point: the
    # y-interval is the gap around q.y among blue points left of q.
    seen_ys: List[int] = []
    for q in by_x:
        j = bisect.bisect_left(seen_ys, q.y)
        bot = seen_ys[j - 1] if j > 0 else y_lo
        top = seen_ys[j] if j < len(seen_ys) else y_hi
        rects.append(axis_rect(x_lo, q.x, bot, top))
        seen_ys.insert(j, q.y)

    # Full-width strips between y-consecutive blue points.
    levels = [y_lo] + sorted(b.y for b in blue) + [y_hi]
    for bot, top in zip(levels, levels[1:]):
        rects.append(axis_rect(x_lo, x_hi, bot, top))

    return rects


def solve_axis_mrr(instance: AxisInstance, counter):
    """Best candidate and its closed red count; ties break to the
    lexicographically smallest bound tuple."""
    candidates = enumerate_axis_candidates(list(instance.blue), instance.clip)
    best = None
    best_size = -1
    for rect in candidates:
        size = counter.count_closed(rect)
        if size > best_size or (size == best_size and rect.bounds() < best.bounds()):
            best, best_size = rect, size
    assert count_open_interior(list(instance.blue), best) == 0
    return best, best_size
