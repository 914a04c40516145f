import random

import pytest

from bichrome.geom import Direction, Point
from bichrome.rangecount import (
    INF,
    NEG_INF,
    KdCounter,
    NaiveCounter,
    OrientedRect,
    axis_rect,
    build_counter,
    count_open_interior,
)


def test_count_closed_examples():
    counter = NaiveCounter([Point(0, 0), Point(2, 0), Point(1, 5)])
    assert counter.count_closed(axis_rect(0, 2, 0, 1)) == 2
    assert NaiveCounter([Point(1, 1)]).count_closed(
        axis_rect(NEG_INF, INF, NEG_INF, INF)) == 1
    diag = OrientedRect(Direction(1, 1), 0, 6, -1, 1)
    assert NaiveCounter([Point(0, 0), Point(3, 3), Point(5, 1)]
                        ).count_closed(diag) == 2


def test_count_open_interior_examples():
    assert count_open_interior([Point(1, 0)], axis_rect(0, 2, 0, 2)) == 0
    assert count_open_interior([Point(1, 1)], axis_rect(0, 2, 0, 2)) == 1
    rect = OrientedRect(Direction(1, 1), 0, 10, NEG_INF, 1)
    assert count_open_interior([Point(2, 2)], rect) == 1


def test_rect_validation():
    with pytest.raises(ValueError):
        axis_rect(3, 3, 0, 1)
    with pytest.raises(ValueError):
        axis_rect(0, 1, 5, 4)


def _random_rect(rng):
    d = Direction(rng.randint(-7, 7) or 1, rng.randint(-7, 7))
    lo = rng.randint(-900, 900)
    hi = lo + rng.randint(1, 1500)
    vlo = rng.randint(-900, 900)
    vhi = vlo + rng.randint(1, 1500)
    bounds = [lo, hi, vlo, vhi]
    for idx, inf in ((0, NEG_INF), (1, INF), (2, NEG_INF), (3, INF)):
        if rng.random() < 0.25:
            bounds[idx] = inf
    return OrientedRect(d, *bounds)


def test_closed_at_least_open_and_monotone():
    rng = random.Random(11)
    pts = [Point(rng.randint(0, 200), rng.randint(0, 200)) for _ in range(60)]
    counter = NaiveCounter(pts)
    for _ in range(300):
        rect = _random_rect(rng)
        closed = counter.count_closed(rect)
        assert closed >= count_open_interior(pts, rect)
        if rect.u_hi != INF:
            wider = OrientedRect(rect.dir, rect.u_lo, rect.u_hi + 5,
                                 rect.v_lo, rect.v_hi)
            assert counter.count_closed(wider) >= closed


def test_backend_equality_random():
    rng = random.Random(12)
    pts = [Point(rng.randint(0, 500), rng.randint(0, 500)) for _ in range(150)]
    naive = build_counter(pts, "naive")
    accel = build_counter(pts, "accel")
    for _ in range(800):
        rect = _random_rect(rng)
        assert naive.count_closed(rect) == accel.count_closed(rect)


def test_accel_empty_and_single():
    assert KdCounter([]).count_closed(axis_rect(0, 1, 0, 1)) == 0
    counter = KdCounter([Point(3, 3)])
    assert counter.count_closed(axis_rect(2, 4, 2, 4)) == 1
    assert counter.count_closed(axis_rect(4, 5, 2, 4)) == 0


def test_unknown_backend():
    with pytest.raises(ValueError):
        build_counter([], "gpu")
