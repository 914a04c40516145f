import random

import pytest

from bichrome.axis import (
    enumerate_axis_candidates,
    solve_axis_mrr,
    validate_axis_instance,
)
from bichrome.geom import GeneralPositionError, Point
from bichrome.instances import gen_mrr_instance
from bichrome.oracles import axis_candidate_set_brute, oracle_axis_mrr
from bichrome.rangecount import NaiveCounter, count_open_interior


def test_candidates_empty_blue():
    rects = enumerate_axis_candidates([], (-1, 1, -1, 1))
    assert len(rects) == 1
    assert rects[0].bounds() == (-1, 1, -1, 1)


def test_candidates_single_blue():
    rects = enumerate_axis_candidates([Point(0, 0)], (-1, 1, -1, 1))
    assert {r.bounds() for r in rects} == {
        (0, 1, -1, 1), (-1, 0, -1, 1), (-1, 1, -1, 0), (-1, 1, 0, 1),
    }


def test_candidates_reject_ties():
    with pytest.raises(GeneralPositionError):
        enumerate_axis_candidates([Point(0, 0), Point(0, 5)], (-1, 1, -1, 6))


def test_candidate_set_matches_brute_force():
    rng = random.Random(21)
    for i in range(12):
        m = rng.randint(0, 12)
        red, blue = gen_mrr_instance(500 + i, 2, m, coord_max=300, axis=True)
        inst = validate_axis_instance(red, blue)
        mine = {r.bounds() for r in
                enumerate_axis_candidates(list(inst.blue), inst.clip)}
        assert mine == axis_candidate_set_brute(blue, inst.clip)
        assert len(mine) <= m * (m - 1) + 8 * m + 8


def test_candidates_blue_free_and_maximal():
    rng = random.Random(22)
    for i in range(10):
        m = rng.randint(1, 14)
        red, blue = gen_mrr_instance(900 + i, 1, m, coord_max=400, axis=True)
        inst = validate_axis_instance(red, blue)
        rects = enumerate_axis_candidates(list(inst.blue), inst.clip)
        bounds = [r.bounds() for r in rects]
        assert len(set(bounds)) == len(bounds)
        for r in rects:
            assert count_open_interior(blue, r) == 0
        for r in bounds:
            assert not any(
                s != r and s[0] <= r[0] and s[1] >= r[1]
                and s[2] <= r[2] and s[3] >= r[3]
                for s in bounds
            )


def test_solve_examples():
    inst = validate_axis_instance([Point(1, 1), Point(2, 2)], [])
    assert solve_axis_mrr(inst, NaiveCounter(list(inst.red)))[1] == 2

    red = [Point(0, 0), Point(10, 0)]
    inst = validate_axis_instance(red, [Point(5, 1)])
    assert solve_axis_mrr(inst, NaiveCounter(red))[1] == 2

    red = [Point(0, 0), Point(10, 10)]
    inst = validate_axis_instance(red, [Point(5, 6)])
    assert solve_axis_mrr(inst, NaiveCounter(red))[1] == 1


def test_validation_rules():
    with pytest.raises(GeneralPositionError):
        validate_axis_instance([Point(1, 1)], [Point(1, 1)])
    with pytest.raises(GeneralPositionError):
        validate_axis_instance([], [Point(0, 0), Point(0, 3)])
    # red coordinate ties are fine; only blue ties break the enumeration
    validate_axis_instance([Point(0, 0), Point(3, 0)], [Point(1, 2)])


def test_solve_matches_oracle_random():
    rng = random.Random(23)
    for i in range(40):
        n, m = rng.randint(1, 25), rng.randint(0, 25)
        red, blue = gen_mrr_instance(3100 + i, n, m, coord_max=500, axis=True)
        inst = validate_axis_instance(red, blue)
        _, size = solve_axis_mrr(inst, NaiveCounter(red))
        assert size == oracle_axis_mrr(red, blue)


def test_deterministic_tie_break():
    red = [Point(5, 5)]
    blue = [Point(2, 1), Point(8, 3)]
    inst = validate_axis_instance(red, blue)
    best1 = solve_axis_mrr(inst, NaiveCounter(red))
    best2 = solve_axis_mrr(inst, NaiveCounter(red))
    assert best1[0].bounds() == best2[0].bounds()
