"""Maximum coloring of paired points via blue-free halfplane maximization.

The pair instance is dualized to 2n lines; a halfplane containing at most
one point per pair corresponds to a point in the dual arrangement with at
most one line of each pair below (or above) it.  Feasibility of "exactly k
lines below" is decided by walking the k-level while counting, per pair, how
many of its two lines run below the level; a binary search over k then
maximizes, and the witness point maps back to the primal halfplane.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .geom import (
    COLLINEAR,
    GeneralPositionError,
    Line,
    Point,
    check_coordinate_range,
    dual_line,
    line_from_slope_intercept,
    orientation,
    side_of_line,
)

BELOW = "below"
ABOVE = "above"


class ConcurrentLinesError(GeneralPositionError):
    pass


class EmptyInstanceError(Exception):
    pass


@dataclass(frozen=True)
class PairInstance:
    pairs: Tuple[Tuple[Point, Point], ...]


def validate_pair_instance(pairs: Sequence[Tuple[Point, Point]]) -> PairInstance:
    """All 2n points distinct and no three collinear (collinear primal
    triples are exactly concurrent dual triples, which break the walker)."""
    if not pairs:
        raise EmptyInstanceError("no pairs")
    pts = [p for pair in pairs for p in pair]
    check_coordinate_range(pts)
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("duplicate points across pairs")
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(pts[i], pts[j], pts[k]) == COLLINEAR:
                    raise GeneralPositionError(
                        f"collinear points {pts[i]} {pts[j]} {pts[k]}"
                    )
    return PairInstance(tuple((a, b) for a, b in pairs))


@dataclass(frozen=True)
class DualArrangementInput:
    """2n dual lines; line 2i and 2i+1 form pair i."""

    lines: Tuple[Line, ...]


def dualize(instance: PairInstance) -> DualArrangementInput:
    lines = []
    for a, b in instance.pairs:
        lines.append(dual_line(a))
        lines.append(dual_line(b))
    return DualArrangementInput(tuple(lines))


def _slope_intercept(line: Line) -> Tuple[Fraction, Fraction]:
    return (Fraction(-line.a, line.b), Fraction(-line.c, line.b))


@dataclass(frozen=True)
class LevelVertex:
    x: Fraction
    y: Fraction
    incoming: int
    outgoing: int


@dataclass(frozen=True)
class LevelPolyline:
    """The k-level: every open edge has exactly k lines strictly below it."""

    lines: Tuple[Tuple[object, object], ...]
    k: int
    leftmost: int
    vertices: Tuple[LevelVertex, ...]

    def line_at(self, x) -> int:
        xs = [v.x for v in self.vertices]
        i = bisect.bisect_right(xs, x)
        return self.leftmost if i == 0 else self.vertices[i - 1].outgoing

    def height_at(self, x) -> Fraction:
        m, c = self.lines[self.line_at(x)]
        return Fraction(m) * Fraction(x) + Fraction(c)


def k_level(lines: Sequence[Tuple[object, object]], k: int) -> LevelPolyline:
    """Exact left-to-right walk of the k-level of slope/intercept lines.

    Starts on the (k+1)-th lowest line at x -> -inf; at each crossing of the
    current line the level transfers to the partner.  Each step scans all
    lines for the nearest crossing to the right, which is quadratic overall
    and deliberately simple.
    """
    nlines = len(lines)
    if not 0 <= k < nlines:
        raise ValueError(f"k={k} out of range for {nlines} lines")
    at_minus_inf = sorted(range(nlines), key=lambda i: (-lines[i][0], lines[i][1]))
    current = at_minus_inf[k]
    x_cur = None
    vertices: List[LevelVertex] = []
    while True:
        m0, c0 = lines[current]
        best_x = None
        best_partner = -1
        tied = False
        for idx in range(nlines):
            if idx == current:
                continue
            m1, c1 = lines[idx]
            if m1 == m0:
                continue
            x = Fraction(c0 - c1, m1 - m0)
            if x_cur is not None and x <= x_cur:
                continue
            if best_x is None or x < best_x:
                best_x, best_partner, tied = x, idx, False
            elif x == best_x:
                tied = True
        if best_x is None:
            break
        if tied:
            raise ConcurrentLinesError(
                f"three lines meet at x={best_x} on the {k}-level"
            )
        y = Fraction(m0) * best_x + c0
        vertices.append(LevelVertex(best_x, y, current, best_partner))
        current = best_partner
        x_cur = best_x
    return LevelPolyline(tuple(tuple(l) for l in lines), k,
                         at_minus_inf[k], tuple(vertices))


def _decide_below(lines: List[Tuple[object, object]], k: int):
    """Witness on the k-level with no pair fully below, or None.

    A per-pair tally counts how many of the pair's lines run strictly below
    the current edge; it changes only at vertices where the crossing partner
    arrives from below (steeper slope), in which case the partner leaves the
    below-set and the previous level line joins it.
    """
    level = k_level(lines, k)
    npairs = len(lines) // 2
    verts = level.vertices
    x0 = (verts[0].x - 1) if verts else Fraction(0)
    cur = level.leftmost
    m0, c0 = lines[cur]
    y0 = Fraction(m0) * x0 + c0
    arr = [0] * npairs
    for idx, (m, c) in enumerate(lines):
        if idx != cur and Fraction(m) * x0 + c < y0:
            arr[idx // 2] += 1
    n_b = sum(1 for a in arr if a == 2)
    if n_b == 0:
        return (x0, y0)
    for vi, vert in enumerate(verts):
        lin, lout = vert.incoming, vert.outgoing
        if lines[lout][0] > lines[lin][0]:
            jp = lout // 2
            if arr[jp] == 2:
                n_b -= 1
            arr[jp] -= 1
            jp = lin // 2
            arr[jp] += 1
            if arr[jp] == 2:
                n_b += 1
        if n_b == 0:
            if vi + 1 < len(verts):
                xm = (vert.x + verts[vi + 1].x) / 2
            else:
                xm = vert.x + 1
            m, c = lines[lout]
            return (xm, Fraction(m) * xm + c)
    return None


def decide(dual: DualArrangementInput, k: int, side: str):
    """Is there a point with exactly k lines strictly on `side` of it and no
    pair entirely on that side?  Returns a witness (x, y) or None.

    The above-side instance is solved by reflecting y -> -y and reusing the
    below machinery; the witness is mapped back.
    """
    lines = [_slope_intercept(ln) for ln in dual.lines]
    if side == ABOVE:
        lines = [(-m, -c) for m, c in lines]
    elif side != BELOW:
        raise ValueError(f"unknown side {side!r}")
    witness = _decide_below(lines, k)
    if witness is None:
        return None
    x, y = witness
    return (x, -y) if side == ABOVE else (x, y)


@dataclass(frozen=True)
class ColoringCertificate:
    halfplane: Line
    side: str            # open halfplane strictly above or below the line
    eta: int
    colors: Tuple[Tuple[Point, str], ...]
    red_in_halfplane: Tuple[Point, ...]

    def color_of(self, p: Point) -> str:
        return dict(self.colors)[p]


def halfplane_contains(line: Line, side: str, p: Point) -> bool:
    s = side_of_line(line, p.x, p.y)
    return s > 0 if side == ABOVE else s < 0


def solve_maxcol(instance: PairInstance) -> ColoringCertificate:
    """Maximize the red count of a blue-free open halfplane over all valid
    colorings; points inside the optimal halfplane are colored red, their
    partners blue, and untouched pairs default to (red, blue)."""
    n = len(instance.pairs)
    if n == 0:
        raise EmptyInstanceError("no pairs")
    dual = dualize(instance)
    best_k = -1
    best_witness = None
    best_side = None
    for side in (BELOW, ABOVE):
        lo, hi = 0, 2 * n - 1
        assert decide(dual, 0, side) is not None
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if decide(dual, mid, side) is not None:
                lo = mid
            else:
                hi = mid - 1
        if lo > best_k:
            best_k = lo
            best_side = side
            best_witness = decide(dual, lo, side)
    wx, wy = best_witness
    # The witness's own dual line bounds the primal halfplane: k lines below
    # the witness means k points strictly above it; k lines above means k
    # points strictly below.
    halfplane = line_from_slope_intercept(wx, -wy)
    side = ABOVE if best_side == BELOW else BELOW
    colors: Dict[Point, str] = {}
    red_in: List[Point] = []
    for a, b in instance.pairs:
        a_in = halfplane_contains(halfplane, side, a)
        b_in = halfplane_contains(halfplane, side, b)
        assert not (a_in and b_in), "witness admits a pair fully inside"
        if b_in:
            a, b = b, a
            a_in, b_in = b_in, a_in
        colors[a] = "red"
        colors[b] = "blue"
        if a_in:
            red_in.append(a)
    assert len(red_in) == best_k, (len(red_in), best_k)
    return ColoringCertificate(
        halfplane=halfplane,
        side=side,
        eta=best_k,
        colors=tuple(colors.items()),
        red_in_halfplane=tuple(red_in),
    )
