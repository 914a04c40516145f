"""General-orientation maximum red rectangle via a rotational event sweep.

The sweep visits every orientation defined by a blue point paired with any
other point.  Two sorted sequences of the blue set (by rotated x and by
rotated y) are maintained kinetically: they change only by adjacent swaps at
critical angles, so no orientation is ever sorted from scratch after the
bootstrap.  At each anchor orientation a staircase walk enumerates every
candidate rectangle whose bottom side lies on the anchor line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .geom import (
    COLLINEAR,
    Direction,
    GeneralPositionError,
    Point,
    check_coordinate_range,
    critical_direction_x,
    critical_direction_y,
    direction_sort_key,
    frame_coords,
    orientation,
)
from .rangecount import INF, NEG_INF, OrientedRect


class AdjacencyViolationError(GeneralPositionError):
    """A swap event found its two points non-consecutive: the instance
    violates the general-position rules and must not be repaired."""


class EmptyRedError(Exception):
    pass


X_BOOTSTRAP, Y_BOOTSTRAP, X_SWAP, Y_SWAP, ANCHOR = range(5)

_KIND_NAMES = {
    X_BOOTSTRAP: "x-bootstrap",
    Y_BOOTSTRAP: "y-bootstrap",
    X_SWAP: "x-swap",
    Y_SWAP: "y-swap",
    ANCHOR: "anchor",
}


@dataclass(frozen=True)
class Event:
    dir: Direction
    kind: int
    # Swap events carry two blue indices; anchor events carry the anchor
    # pair (p blue, q red or blue).
    i: int = -1
    j: int = -1
    p: Optional[Point] = None
    q: Optional[Point] = None

    def kind_name(self) -> str:
        return _KIND_NAMES[self.kind]


@dataclass(frozen=True)
class CandidateRect:
    """A candidate with the points realizing each side (None = unbounded)."""

    rect: OrientedRect
    p: Optional[Point]
    q: Optional[Point]
    left: Optional[Point] = None
    right: Optional[Point] = None
    top: Optional[Point] = None


class KineticOrder:
    """Blue indices sorted by current rotated x (bx) and rotated y (by)."""

    def __init__(self, blue: List[Point]):
        self.blue = list(blue)
        self.bx: List[int] = []
        self.by: List[int] = []
        self._posx: Dict[int, int] = {}
        self._posy: Dict[int, int] = {}

    def bootstrap(self, d: Direction, axis: str) -> None:
        keys = [frame_coords(b, d) for b in self.blue]
        coord = 0 if axis == "x" else 1
        ids = sorted(range(len(self.blue)), key=lambda i: keys[i][coord])
        for a, b in zip(ids, ids[1:]):
            if keys[a][coord] == keys[b][coord]:
                raise GeneralPositionError(
                    f"tied {axis}-coordinates at bootstrap: {self.blue[a]} {self.blue[b]}"
                )
        if axis == "x":
            self.bx = ids
            self._posx = {v: i for i, v in enumerate(ids)}
        else:
            self.by = ids
            self._posy = {v: i for i, v in enumerate(ids)}

    def apply_swap(self, axis: str, a: int, b: int) -> None:
        lst, pos = (self.bx, self._posx) if axis == "x" else (self.by, self._posy)
        pa, pb = pos[a], pos[b]
        if abs(pa - pb) != 1:
            raise AdjacencyViolationError(
                f"{axis}-swap of non-consecutive points "
                f"{self.blue[a]} (pos {pa}) and {self.blue[b]} (pos {pb})"
            )
        lst[pa], lst[pb] = lst[pb], lst[pa]
        pos[a], pos[b] = pb, pa


def kinetic_order_at(blue: List[Point], d: Direction) -> KineticOrder:
    """Fresh exact order at one direction (bootstrap both axes)."""
    order = KineticOrder(blue)
    order.bootstrap(d, "x")
    order.bootstrap(d, "y")
    return order


def _collect_events(red: List[Point], blue: List[Point]) -> List[Event]:
    events = []
    m = len(blue)
    for i in range(m):
        for j in range(i + 1, m):
            dx_axis = critical_direction_x(blue[i], blue[j])
            dy_axis = critical_direction_y(blue[i], blue[j])
            events.append(Event(dx_axis, X_SWAP, i=i, j=j))
            events.append(Event(dx_axis.opposite(), X_SWAP, i=i, j=j))
            events.append(Event(dy_axis, Y_SWAP, i=i, j=j))
            events.append(Event(dy_axis.opposite(), Y_SWAP, i=i, j=j))
    for i, p in enumerate(blue):
        partners = list(red) + [blue[j] for j in range(i + 1, m)]
        for q in partners:
            w = q - p
            d = Direction(w.x, w.y)
            events.append(Event(d, ANCHOR, p=p, q=q))
            events.append(Event(d.opposite(), ANCHOR, p=p, q=q))
    return events


def _event_sort_key(ev: Event):
    if ev.kind == ANCHOR:
        payload = (ev.p.x, ev.p.y, ev.q.x, ev.q.y)
    else:
        payload = (ev.i, ev.j)
    return (direction_sort_key(ev.dir), ev.kind, payload)


def validate_rotating_instance(red: List[Point], blue: List[Point]) -> None:
    """Pinned general position: distinct points, no three collinear, and all
    event directions pairwise distinct.

    The one structural coincidence is allowed: the y-swap of a blue pair and
    that same pair's anchor event always share a direction (the pair aligns
    in rotated y exactly when the frame's x-axis runs along it); kind
    priority processes the swap first.  Any event landing on the bootstrap
    direction is rejected, since the initial sort happens there.
    """
    pts = list(red) + list(blue)
    check_coordinate_range(pts)
    if len(set(pts)) != len(pts):
        raise GeneralPositionError("duplicate points")
    npts = len(pts)
    for i in range(npts):
        for j in range(i + 1, npts):
            for k in range(j + 1, npts):
                if orientation(pts[i], pts[j], pts[k]) == COLLINEAR:
                    raise GeneralPositionError(
                        f"collinear points {pts[i]} {pts[j]} {pts[k]}"
                    )
    groups: Dict[Tuple[int, int], List[Event]] = {}
    for ev in _collect_events(red, blue):
        groups.setdefault((ev.dir.dx, ev.dir.dy), []).append(ev)
    for (dx, dy), evs in groups.items():
        if (dx, dy) == (1, 0):
            raise GeneralPositionError(
                "event direction coincides with the bootstrap angle"
            )
        if len(evs) == 1:
            continue
        if len(evs) == 2:
            swap = next((e for e in evs if e.kind == Y_SWAP), None)
            anchor = next((e for e in evs if e.kind == ANCHOR), None)
            if swap is not None and anchor is not None:
                pair = {blue[swap.i], blue[swap.j]}
                if pair == {anchor.p, anchor.q}:
                    continue
        raise GeneralPositionError(
            "distinct events share direction ({}, {}): {}".format(
                dx, dy, sorted(e.kind_name() for e in evs)
            )
        )


def build_events(red: List[Point], blue: List[Point]) -> List[Event]:
    """Validated, angle-sorted event list, bootstrap events first."""
    validate_rotating_instance(red, blue)
    events = sorted(_collect_events(red, blue), key=_event_sort_key)
    d0 = Direction(1, 0)
    return [Event(d0, X_BOOTSTRAP), Event(d0, Y_BOOTSTRAP)] + events


def anchored_candidates(p: Point, q: Point, d: Direction,
                        order: KineticOrder) -> List[CandidateRect]:
    """Candidates whose bottom side lies on the line pq, interior on the
    v > 0 side of the frame d (d runs along pq; the opposite anchor event
    covers the other halfplane).

    Construction: blue points above the line and below the lowest point over
    the anchor span form two dominance staircases flanking the anchors; every
    valid rectangle takes its left/right sides from a staircase point or
    unbounded, and its top from a side support, the span ceiling, or
    unbounded.  The output equals the exhaustive boundary-choice enumeration.
    """
    dx, dy = d.dx, d.dy
    blue = order.blue
    u = [b.x * dx + b.y * dy for b in blue]
    v = [-b.x * dy + b.y * dx for b in blue]
    u_p = p.x * dx + p.y * dy
    v0 = -p.x * dy + p.y * dx
    u_q = q.x * dx + q.y * dy
    u_left, u_right = (u_p, u_q) if u_p < u_q else (u_q, u_p)

    r_m = None
    for i in range(len(blue)):
        if v[i] > v0 and u_left < u[i] < u_right:
            if r_m is None or v[i] < v[r_m]:
                r_m = i
    v_cut = v[r_m] if r_m is not None else INF

    # Dominance staircases over the anchor-span cut, nearest anchor first.
    # A non-strict boundary (u == anchor u) only arises over a red anchor
    # point, where the aligned blue point behaves as a zero-distance step.
    lst: List[int] = []
    cur = INF
    for i in reversed(order.bx):
        if u[i] <= u_left and v0 < v[i] < v_cut and v[i] < cur:
            lst.append(i)
            cur = v[i]
    rst: List[int] = []
    cur = INF
    for i in order.bx:
        if u[i] >= u_right and v0 < v[i] < v_cut and v[i] < cur:
            rst.append(i)
            cur = v[i]

    cands: List[CandidateRect] = []
    left_chain = lst + [None]
    right_chain = rst + [None]
    for li, ls in enumerate(left_chain):
        ceil_left = v[lst[li - 1]] if li >= 1 else None
        for rj, rs in enumerate(right_chain):
            ceiling = v_cut
            ceil_pt = r_m
            if ceil_left is not None and ceil_left < ceiling:
                ceiling, ceil_pt = ceil_left, lst[li - 1]
            if rj >= 1 and v[rst[rj - 1]] < ceiling:
                ceiling, ceil_pt = v[rst[rj - 1]], rst[rj - 1]
            req = v0
            req_pt = None
            if ls is not None and v[ls] > req:
                req, req_pt = v[ls], ls
            if rs is not None and v[rs] > req:
                req, req_pt = v[rs], rs
            if req > ceiling:
                continue
            tops = [(ceiling, ceil_pt)] if ceil_pt is not None else [(INF, None)]
            if req_pt is not None:
                tops.append((req, req_pt))
            u_lo = u[ls] if ls is not None else NEG_INF
            u_hi = u[rs] if rs is not None else INF
            for top_v, top_i in tops:
                cands.append(CandidateRect(
                    rect=OrientedRect(d, u_lo, u_hi, v0, top_v),
                    p=p, q=q,
                    left=blue[ls] if ls is not None else None,
                    right=blue[rs] if rs is not None else None,
                    top=blue[top_i] if top_i is not None else None,
                ))
    return cands


WHOLE_PLANE = OrientedRect(Direction(1, 0), NEG_INF, INF, NEG_INF, INF)


def run_sweep(red: List[Point], blue: List[Point], counter,
              on_event=None):
    """Full 360-degree sweep; returns (best candidate, size, stats).

    on_event(index, event, order) fires after each event is processed and
    exists for invariant checking.
    """
    events = build_events(red, blue)
    order = KineticOrder(blue)
    best: Optional[CandidateRect] = None
    best_size = -1
    stats = {"candidates_enumerated": 0, "events_processed": 0}
    for idx, ev in enumerate(events):
        if ev.kind == X_BOOTSTRAP:
            order.bootstrap(ev.dir, "x")
        elif ev.kind == Y_BOOTSTRAP:
            order.bootstrap(ev.dir, "y")
        elif ev.kind == X_SWAP:
            order.apply_swap("x", ev.i, ev.j)
        elif ev.kind == Y_SWAP:
            order.apply_swap("y", ev.i, ev.j)
        else:
            for cand in anchored_candidates(ev.p, ev.q, ev.dir, order):
                stats["candidates_enumerated"] += 1
                size = counter.count_closed(cand.rect)
                if size > best_size:
                    best, best_size = cand, size
        stats["events_processed"] += 1
        if on_event is not None:
            on_event(idx, ev, order)
    return best, best_size, stats


def solve_mrr(red: List[Point], blue: List[Point], counter,
              on_event=None):
    """Maximum red rectangle over all orientations.

    With no blue points every rectangle is red, so the whole plane wins and
    the sweep (which needs a blue anchor) is skipped.
    """
    if not red:
        raise EmptyRedError("no red points: the optimum is degenerate")
    if not blue:
        validate_rotating_instance(red, blue)
        cand = CandidateRect(rect=WHOLE_PLANE, p=None, q=None)
        return cand, len(red), {"candidates_enumerated": 1,
                                "events_processed": 0}
    best, best_size, stats = run_sweep(red, blue, counter, on_event=on_event)
    return best, best_size, stats
