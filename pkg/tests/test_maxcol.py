import random
from fractions import Fraction

import pytest

from bichrome.geom import GeneralPositionError, Line, Point, dual_point
from bichrome.instances import gen_maxcol_instance
from bichrome.maxcol import (
    ABOVE,
    BELOW,
    ConcurrentLinesError,
    EmptyInstanceError,
    halfplane_contains,
    decide,
    dualize,
    k_level,
    solve_maxcol,
    validate_pair_instance,
)
from bichrome.oracles import feasible_levels_brute, oracle_level_height, \
    oracle_maxcol


def _dual_si(inst):
    return [(Fraction(-ln.a, ln.b), Fraction(-ln.c, ln.b))
            for ln in dualize(inst).lines]


def _random_lines(rng, count):
    lines = set()
    while len(lines) < count:
        lines.add((rng.randint(-15, 15), rng.randint(-40, 40)))
    lines = sorted(lines)
    # reject concurrencies: three lines through one point break the walker
    pts = {}
    for i, (m1, c1) in enumerate(lines):
        for j in range(i + 1, len(lines)):
            m2, c2 = lines[j]
            if m1 == m2:
                continue
            x = Fraction(c2 - c1, m1 - m2)
            key = (x, Fraction(m1) * x + c1)
            if key in pts and pts[key] not in (i, j):
                return None
            pts[key] = i
    return lines


def rand_lines(rng, count):
    while True:
        lines = _random_lines(rng, count)
        if lines is not None:
            return lines


def test_dualize_examples():
    inst = validate_pair_instance([(Point(2, 3), Point(0, 1))])
    dual = dualize(inst)
    assert dual.lines[0] == Line(2, -1, -3)   # y = 2x - 3
    assert dual.lines[1] == Line(0, 1, 1)     # y = -1
    for ln, p in zip(dual.lines, (Point(2, 3), Point(0, 1))):
        assert dual_point(ln) == (p.x, p.y)


def test_dualize_round_trip_random():
    rng = random.Random(61)
    for i in range(10):
        pairs = gen_maxcol_instance(700 + i, rng.randint(1, 6), coord_max=500)
        inst = validate_pair_instance(pairs)
        dual = dualize(inst)
        pts = [p for pair in inst.pairs for p in pair]
        assert len(dual.lines) == len(pts)
        for ln, p in zip(dual.lines, pts):
            assert dual_point(ln) == (p.x, p.y)


def test_k_level_concurrent_rejected():
    # these three lines all pass through (1, 0)
    with pytest.raises(ConcurrentLinesError):
        k_level([(0, 0), (1, -1), (-1, 1)], 0)


def test_k_level_envelopes():
    lines = [(0, 0), (1, -1), (-1, 2)]
    lower = k_level(lines, 0)
    assert len(lower.vertices) == 2
    upper = k_level(lines, len(lines) - 1)
    for x in (Fraction(-5), Fraction(0), Fraction(3, 2), Fraction(7)):
        vals = [Fraction(m) * x + c for m, c in lines]
        assert lower.height_at(x) == min(vals)
        assert upper.height_at(x) == max(vals)


def test_k_level_single_line():
    level = k_level([(3, -2)], 0)
    assert level.vertices == ()
    assert level.height_at(Fraction(10)) == 28


def test_k_level_pointwise_random():
    rng = random.Random(62)
    for _ in range(6):
        lines = rand_lines(rng, rng.randint(2, 10))
        for k in range(len(lines)):
            level = k_level(lines, k)
            for _ in range(25):
                x = Fraction(rng.randint(-3000, 3000), rng.randint(1, 49))
                assert level.height_at(x) == oracle_level_height(lines, k, x)


def test_decide_examples():
    inst = validate_pair_instance([(Point(0, 0), Point(1, 1))])
    dual = dualize(inst)
    assert decide(dual, 1, BELOW) is not None
    assert decide(dual, 0, BELOW) is not None
    assert decide(dual, 0, ABOVE) is not None


def test_decide_witness_is_exact():
    rng = random.Random(63)
    for i in range(8):
        pairs = gen_maxcol_instance(800 + i, rng.randint(1, 6), coord_max=400)
        inst = validate_pair_instance(pairs)
        dual = dualize(inst)
        si = _dual_si(inst)
        for side in (BELOW, ABOVE):
            for k in range(2 * len(pairs)):
                wit = decide(dual, k, side)
                if wit is None:
                    continue
                x, y = wit
                arr = [0] * len(pairs)
                count = 0
                for idx, (m, c) in enumerate(si):
                    val = m * x + c
                    below = val < y if side == BELOW else val > y
                    if below:
                        count += 1
                        arr[idx // 2] += 1
                assert count == k
                assert all(v < 2 for v in arr)


def test_decide_matches_arrangement_brute():
    rng = random.Random(64)
    for i in range(10):
        pairs = gen_maxcol_instance(900 + i, rng.randint(1, 6), coord_max=400)
        inst = validate_pair_instance(pairs)
        dual = dualize(inst)
        si = _dual_si(inst)
        for side in (BELOW, ABOVE):
            mine = {k for k in range(2 * len(pairs))
                    if decide(dual, k, side) is not None}
            assert mine == feasible_levels_brute(si, side)


def test_decide_monotone():
    rng = random.Random(65)
    for i in range(10):
        pairs = gen_maxcol_instance(1000 + i, rng.randint(1, 6), coord_max=400)
        dual = dualize(validate_pair_instance(pairs))
        for side in (BELOW, ABOVE):
            feas = [decide(dual, k, side) is not None
                    for k in range(2 * len(pairs))]
            assert feas[0]
            for prev, cur in zip(feas, feas[1:]):
                assert prev or not cur  # downward closed


def test_solve_examples():
    cert = solve_maxcol(validate_pair_instance([(Point(0, 0), Point(1, 1))]))
    assert cert.eta == 1

    inst = validate_pair_instance(
        [(Point(0, 0), Point(2, 2)), (Point(0, 2), Point(2, 0))])
    assert solve_maxcol(inst).eta == 2

    inst = validate_pair_instance(
        [(Point(0, 0), Point(1, 0)), (Point(0, 1), Point(1, 1))])
    assert solve_maxcol(inst).eta == 2


def test_certificate_is_valid():
    rng = random.Random(66)
    for i in range(25):
        pairs = gen_maxcol_instance(1100 + i, rng.randint(1, 8), coord_max=600)
        inst = validate_pair_instance(pairs)
        cert = solve_maxcol(inst)
        colors = dict(cert.colors)
        for a, b in inst.pairs:
            assert {colors[a], colors[b]} == {"red", "blue"}
        reds = blues = 0
        for p, color in cert.colors:
            if halfplane_contains(cert.halfplane, cert.side, p):
                if color == "red":
                    reds += 1
                else:
                    blues += 1
        assert blues == 0
        assert reds == cert.eta == len(cert.red_in_halfplane)


def test_solve_matches_oracle_random():
    rng = random.Random(67)
    for i in range(40):
        pairs = gen_maxcol_instance(1200 + i, rng.randint(1, 7), coord_max=800)
        inst = validate_pair_instance(pairs)
        assert solve_maxcol(inst).eta == oracle_maxcol(pairs), i


def test_vertical_pairs_give_parallel_dual_lines():
    # equal x within a pair is legal; the duals are parallel and never cross
    cases = [
        [(Point(3, 1), Point(3, 5))],
        [(Point(0, 0), Point(0, 7)), (Point(2, 1), Point(5, 9)),
         (Point(4, 3), Point(4, 6))],
        [(Point(0, 0), Point(0, 7)), (Point(3, 1), Point(3, 9)),
         (Point(6, 3), Point(6, 14))],
    ]
    for pairs in cases:
        cert = solve_maxcol(validate_pair_instance(pairs))
        assert cert.eta == oracle_maxcol(pairs)


def test_validation_rules():
    with pytest.raises(EmptyInstanceError):
        validate_pair_instance([])
    with pytest.raises(GeneralPositionError):
        validate_pair_instance(
            [(Point(0, 0), Point(1, 1)), (Point(0, 0), Point(2, 3))])
    with pytest.raises(GeneralPositionError):
        validate_pair_instance(
            [(Point(0, 0), Point(1, 1)), (Point(2, 2), Point(3, 5))])
