"""Independent brute-force references for every solver in the package.

These share no machinery with the solvers beyond the exact primitives in
geom: sorted orders are rebuilt from scratch, candidate spaces are
enumerated exhaustively, and counting is done by direct scans.  They exist
to be trusted, not to be fast, and enforce small size limits.
"""

from __future__ import annotations

import bisect
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Set, Tuple

from .geom import Direction, Point, orientation

INF = float("inf")
NEG_INF = float("-inf")


class LimitExceededError(Exception):
    pass


ORACLE_MRR_LIMIT = 12


def _closed_count(reds_uv, u_lo, u_hi, v_lo, v_hi) -> int:
    return sum(1 for u, v in reds_uv
               if u_lo <= u <= u_hi and v_lo <= v <= v_hi)


def anchored_rects_brute(p: Point, q: Point, d: Direction,
                         blue: Sequence[Point]) -> Set[Tuple]:
    """Every rectangle with bottom side on the line pq (interior on the
    v > 0 side of frame d) whose boundary choices come from the blue points
    above the line, filtered by the candidate-set definition: blue-free open
    interior and every non-bottom side through a blue point or unbounded.

    Returns bound tuples (u_lo, u_hi, v_lo, v_hi) in frame units.
    """
    dx, dy = d.dx, d.dy
    uv = [(b.x * dx + b.y * dy, -b.x * dy + b.y * dx) for b in blue]
    u_p = p.x * dx + p.y * dy
    v0 = -p.x * dy + p.y * dx
    u_q = q.x * dx + q.y * dy
    u_left, u_right = (u_p, u_q) if u_p < u_q else (u_q, u_p)

    above = [(u, v) for u, v in uv if v > v0]
    mid_vs = [v for u, v in above if u_left < u < u_right]
    v_cut = min(mid_vs) if mid_vs else INF
    pool = [(u, v) for u, v in above if v <= v_cut]

    lefts = {NEG_INF} | {u for u, v in pool if u <= u_left}
    rights = {INF} | {u for u, v in pool if u >= u_right}
    tops = {INF} | {v for u, v in pool}

    out = set()
    for lo in lefts:
        for hi in rights:
            for top in tops:
                if any(lo < u < hi and v0 < v < top for u, v in uv):
                    continue
                if lo != NEG_INF and not any(
                        u == lo and v0 <= v <= top for u, v in uv):
                    continue
                if hi != INF and not any(
                        u == hi and v0 <= v <= top for u, v in uv):
                    continue
                if top != INF and not any(
                        v == top and lo <= u <= hi for u, v in uv):
                    continue
                out.add((lo, hi, v0, top))
    return out


def oracle_mrr(red: Sequence[Point], blue: Sequence[Point],
               limit: int = ORACLE_MRR_LIMIT) -> int:
    """Exhaustive maximum red rectangle over all anchored orientations."""
    if len(red) > limit or len(blue) > limit:
        raise LimitExceededError(
            f"oracle_mrr limited to {limit} points per color"
        )
    if not blue:
        return len(red)
    best = 0
    for bi, p in enumerate(blue):
        partners = list(red) + list(blue[bi + 1:])
        for q in partners:
            w = q - p
            for d in (Direction(w.x, w.y), Direction(-w.x, -w.y)):
                dx, dy = d.dx, d.dy
                reds_uv = [(r.x * dx + r.y * dy, -r.x * dy + r.y * dx)
                           for r in red]
                for lo, hi, v_lo, v_hi in anchored_rects_brute(p, q, d, blue):
                    size = _closed_count(reds_uv, lo, hi, v_lo, v_hi)
                    if size > best:
                        best = size
    return best


def axis_candidate_set_brute(blue: Sequence[Point],
                             clip: Tuple[int, int, int, int]) -> Set[Tuple]:
    """All maximal blue-empty axis rectangles by filtering every boundary
    4-tuple for emptiness, then discarding rectangles properly contained in
    another surviving one."""
    x_lo, x_hi, y_lo, y_hi = clip
    xs = sorted({x_lo, x_hi} | {b.x for b in blue})
    ys = sorted({y_lo, y_hi} | {b.y for b in blue})
    empty = []
    for lo in xs:
        for hi in xs:
            if hi <= lo:
                continue
            strip = [b for b in blue if lo < b.x < hi]
            for bot in ys:
                for top in ys:
                    if top <= bot:
                        continue
                    if any(bot < b.y < top for b in strip):
                        continue
                    empty.append((lo, hi, bot, top))
    maximal = set()
    for r in empty:
        contained = any(
            s != r and s[0] <= r[0] and s[1] >= r[1]
            and s[2] <= r[2] and s[3] >= r[3]
            for s in empty
        )
        if not contained:
            maximal.add(r)
    return maximal


def oracle_axis_mrr(red: Sequence[Point], blue: Sequence[Point]) -> int:
    """Max closed red count over every blue-empty axis boundary choice.

    Equivalent to scanning all 4-tuples: for a fixed x-span only the y-gaps
    between blue points inside the span can hold an empty rectangle, and
    widening to the full gap never loses red points.
    """
    pts = list(red) + list(blue)
    if not pts:
        return 0
    x_lo = min(p.x for p in pts) - 1
    x_hi = max(p.x for p in pts) + 1
    y_lo = min(p.y for p in pts) - 1
    y_hi = max(p.y for p in pts) + 1
    lefts = sorted({x_lo} | {b.x for b in blue})
    rights = sorted({x_hi} | {b.x for b in blue})
    best = 0
    for lo in lefts:
        for hi in rights:
            if hi <= lo:
                continue
            red_ys = sorted(r.y for r in red if lo <= r.x <= hi)
            if not red_ys:
                continue
            levels = [y_lo] + sorted(b.y for b in blue if lo < b.x < hi) + [y_hi]
            for bot, top in zip(levels, levels[1:]):
                size = _count_in_sorted(red_ys, bot, top)
                if size > best:
                    best = size
    return best


def _count_in_sorted(sorted_vals: List[int], lo, hi) -> int:
    return bisect.bisect_right(sorted_vals, hi) - bisect.bisect_left(sorted_vals, lo)


def oracle_maxcol(pairs: Sequence[Tuple[Point, Point]]) -> int:
    """Max points of a halfplane holding at most one point per pair.

    Candidate halfplanes: for every line through two points, both sides with
    the boundary pair included, excluded, or split (one in, one out - the
    split cases are what a slight rotation about a point between them
    realizes); plus halfplanes isolating a single point.
    """
    pts = [p for pair in pairs for p in pair]
    pair_of = {}
    for idx, (a, b) in enumerate(pairs):
        pair_of[a] = idx
        pair_of[b] = idx
    if not pts:
        return 0
    best = 1  # a halfplane around any single point is always valid
    npairs = len(pairs)
    for a, b in combinations(pts, 2):
        signs = {p: orientation(a, b, p) for p in pts}
        on_line = [p for p in pts if signs[p] == 0]
        for side in (1, -1):
            inside = [p for p in pts if signs[p] == side]
            variants = [
                inside,
                inside + on_line,
                inside + [a],
                inside + [b],
            ]
            for members in variants:
                per_pair = [0] * npairs
                ok = True
                for p in members:
                    per_pair[pair_of[p]] += 1
                    if per_pair[pair_of[p]] > 1:
                        ok = False
                        break
                if ok and len(members) > best:
                    best = len(members)
    return best


def oracle_level_height(lines: Sequence[Tuple[object, object]], k: int, x) -> Fraction:
    """(k+1)-th smallest line value at x, straight from the definition."""
    vals = sorted(Fraction(m) * Fraction(x) + Fraction(c) for m, c in lines)
    return vals[k]


def feasible_levels_brute(lines: Sequence[Tuple[object, object]],
                          side: str = "below") -> Set[int]:
    """All k for which some arrangement-edge midpoint has exactly k lines
    strictly on `side` and no index pair (2j, 2j+1) fully on that side."""
    if side == "above":
        lines = [(-m, -c) for m, c in lines]
    feasible: Set[int] = set()
    npairs = len(lines) // 2
    for li, (m0, c0) in enumerate(lines):
        xs = sorted({Fraction(c0 - c1, m1 - m0)
                     for lj, (m1, c1) in enumerate(lines)
                     if lj != li and m1 != m0})
        if xs:
            mids = [xs[0] - 1] + [(a + b) / 2 for a, b in zip(xs, xs[1:])] \
                 + [xs[-1] + 1]
        else:
            mids = [Fraction(0)]
        for x in mids:
            y0 = Fraction(m0) * x + c0
            arr = [0] * npairs
            count = 0
            for lj, (m1, c1) in enumerate(lines):
                if lj != li and Fraction(m1) * x + c1 < y0:
                    count += 1
                    arr[lj // 2] += 1
            if all(v < 2 for v in arr):
                feasible.add(count)
    return feasible
