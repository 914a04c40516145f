"""Rigid-motion invariance: optima survive translation and 90-degree
rotation. The generator only emits non-negative coordinates, so these loops
also cover the negative-coordinate paths."""

import random

from bichrome.axis import solve_axis_mrr, validate_axis_instance
from bichrome.geom import GeneralPositionError, Point
from bichrome.instances import gen_maxcol_instance, gen_mrr_instance
from bichrome.maxcol import solve_maxcol, validate_pair_instance
from bichrome.oracles import oracle_mrr
from bichrome.rangecount import NaiveCounter
from bichrome.rotating import solve_mrr


def translate(pts, dx, dy):
    return [Point(p.x + dx, p.y + dy) for p in pts]


def rot90(pts):
    return [Point(-p.y, p.x) for p in pts]


def test_mrr_rigid_motion_invariance():
    rng = random.Random(271)
    for i in range(25):
        n, m = rng.randint(1, 8), rng.randint(0, 8)
        red, blue = gen_mrr_instance(f"inv:{i}", n, m, coord_max=800)
        base = solve_mrr(red, blue, NaiveCounter(red))[1]
        dx, dy = rng.randint(-1500, 400), rng.randint(-1500, 400)
        tr_red, tr_blue = translate(red, dx, dy), translate(blue, dx, dy)
        assert solve_mrr(tr_red, tr_blue, NaiveCounter(tr_red))[1] == base
        assert oracle_mrr(tr_red, tr_blue) == base
        try:
            ro_red, ro_blue = rot90(red), rot90(blue)
            assert solve_mrr(ro_red, ro_blue, NaiveCounter(ro_red))[1] == base
        except GeneralPositionError:
            pass  # an event rotated onto the bootstrap angle; rejection is correct


def test_axis_rigid_motion_invariance():
    rng = random.Random(272)
    for i in range(25):
        n, m = rng.randint(1, 20), rng.randint(0, 20)
        red, blue = gen_mrr_instance(f"axinv:{i}", n, m, coord_max=800,
                                     axis=True)
        inst = validate_axis_instance(red, blue)
        base = solve_axis_mrr(inst, NaiveCounter(red))[1]
        tr_red, tr_blue = translate(red, -900, -350), translate(blue, -900, -350)
        shifted = validate_axis_instance(tr_red, tr_blue)
        assert solve_axis_mrr(shifted, NaiveCounter(tr_red))[1] == base
        rotated = validate_axis_instance(rot90(red), rot90(blue))
        assert solve_axis_mrr(rotated, NaiveCounter(rot90(red)))[1] == base


def test_maxcol_rigid_motion_invariance():
    rng = random.Random(273)
    for i in range(20):
        k = rng.randint(1, 8)
        pairs = gen_maxcol_instance(f"mcinv:{i}", k, coord_max=800)
        base = solve_maxcol(validate_pair_instance(pairs)).eta
        tr = [(Point(a.x - 777, a.y - 313), Point(b.x - 777, b.y - 313))
              for a, b in pairs]
        assert solve_maxcol(validate_pair_instance(tr)).eta == base
        ro = [(Point(-a.y, a.x), Point(-b.y, b.x)) for a, b in pairs]
        assert solve_maxcol(validate_pair_instance(ro)).eta == base


def test_extreme_coordinates():
    red = [Point(2 ** 20, 2 ** 20 - 1), Point(-2 ** 20, -2 ** 20 + 3)]
    blue = [Point(5, 2 ** 20 - 11)]
    assert solve_mrr(red, blue, NaiveCounter(red))[1] == oracle_mrr(red, blue)
