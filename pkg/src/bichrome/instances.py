"""Instance files: JSON schemas, validation dispatch and seeded generation.

MRR instances:    {"red": [[x, y], ...], "blue": [[x, y], ...]}
MaxCol instances: {"pairs": [[[x1, y1], [x2, y2]], ...]}

Coordinates are integers within the documented magnitude bound; generation
resamples until the per-problem general-position validation passes.
"""

from __future__ import annotations

import json
import random
from typing import List, Tuple

from .axis import validate_axis_instance
from .geom import GeneralPositionError, Point, check_coordinate_range
from .maxcol import validate_pair_instance
from .rotating import validate_rotating_instance

PROBLEMS = ("mrr", "mrr-axis", "maxcol")


class InvalidInstanceError(Exception):
    pass


def _parse_point(obj) -> Point:
    if (not isinstance(obj, (list, tuple)) or len(obj) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in obj)):
        raise InvalidInstanceError(f"not an integer point: {obj!r}")
    return Point(obj[0], obj[1])


def parse_mrr_instance(data) -> Tuple[List[Point], List[Point]]:
    if not isinstance(data, dict) or set(data) != {"red", "blue"}:
        raise InvalidInstanceError("expected an object with 'red' and 'blue'")
    red = [_parse_point(p) for p in data["red"]]
    blue = [_parse_point(p) for p in data["blue"]]
    return red, blue


def parse_maxcol_instance(data) -> List[Tuple[Point, Point]]:
    if not isinstance(data, dict) or set(data) != {"pairs"}:
        raise InvalidInstanceError("expected an object with 'pairs'")
    pairs = []
    for pair in data["pairs"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InvalidInstanceError(f"not a point pair: {pair!r}")
        pairs.append((_parse_point(pair[0]), _parse_point(pair[1])))
    return pairs


def load_instance(path: str, problem: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInstanceError(f"cannot read {path}: {exc}") from exc
    if problem == "maxcol":
        pairs = parse_maxcol_instance(data)
        try:
            check_coordinate_range(p for pair in pairs for p in pair)
        except Exception as exc:
            raise InvalidInstanceError(str(exc)) from exc
        return pairs
    red, blue = parse_mrr_instance(data)
    try:
        check_coordinate_range(red + blue)
    except Exception as exc:
        raise InvalidInstanceError(str(exc)) from exc
    return red, blue


def mrr_instance_json(red: List[Point], blue: List[Point]) -> dict:
    return {"red": [[p.x, p.y] for p in red],
            "blue": [[p.x, p.y] for p in blue]}


def maxcol_instance_json(pairs) -> dict:
    return {"pairs": [[[a.x, a.y], [b.x, b.y]] for a, b in pairs]}


def save_instance(path: str, data: dict) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True, indent=1)
        fh.write("\n")


def _sample_points(rng: random.Random, count: int, coord_max: int) -> List[Point]:
    return [Point(rng.randint(0, coord_max), rng.randint(0, coord_max))
            for _ in range(count)]


def gen_mrr_instance(seed, n: int, m: int, coord_max: int = 1000,
                     axis: bool = False, max_tries: int = 10000):
    """Red/blue points resampled until the target validation accepts them."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        red = _sample_points(rng, n, coord_max)
        blue = _sample_points(rng, m, coord_max)
        try:
            if axis:
                validate_axis_instance(red, blue)
            else:
                validate_rotating_instance(red, blue)
        except GeneralPositionError:
            continue
        return red, blue
    raise InvalidInstanceError(
        f"could not generate a valid instance (n={n}, m={m}, coord_max={coord_max})"
    )


def gen_maxcol_instance(seed, pair_count: int, coord_max: int = 1000,
                        max_tries: int = 10000):
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = _sample_points(rng, 2 * pair_count, coord_max)
        pairs = [(pts[2 * i], pts[2 * i + 1]) for i in range(pair_count)]
        try:
            validate_pair_instance(pairs)
        except GeneralPositionError:
            continue
        return pairs
    raise InvalidInstanceError(
        f"could not generate a valid maxcol instance (pairs={pair_count})"
    )


def gen_instance(problem: str, seed, n: int, m: int, coord_max: int = 1000) -> dict:
    """Seeded instance generation; identical arguments yield identical files."""
    if problem == "maxcol":
        return maxcol_instance_json(gen_maxcol_instance(seed, n, coord_max))
    if problem in ("mrr", "mrr-axis"):
        red, blue = gen_mrr_instance(seed, n, m, coord_max,
                                     axis=(problem == "mrr-axis"))
        return mrr_instance_json(red, blue)
    raise InvalidInstanceError(f"unknown problem {problem!r}")
