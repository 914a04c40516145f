"""Command-line harness: solve, cross-check, generate and render instances.

Subcommands: mrr, mrr-axis, maxcol, oracle, gen, render, verify.
Exit codes: 0 success / verified, 1 verification mismatch, 2 invalid input.
Errors are emitted as JSON objects on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import axis, instances, maxcol, oracles, rotating, svg
from .geom import GeometryError, Line, Point
from .rangecount import INF, NEG_INF, NaiveCounter, build_counter, \
    count_open_interior


def rational_str(v) -> str:
    if v == INF:
        return "inf"
    if v == NEG_INF:
        return "-inf"
    f = Fraction(v)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(s: str):
    if s == "inf":
        return INF
    if s == "-inf":
        return NEG_INF
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def _point_json(p: Optional[Point]):
    return None if p is None else [p.x, p.y]


def _emit_error(exc: Exception) -> None:
    payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
    print(json.dumps(payload), file=sys.stderr)


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _mrr_solution(problem: str, red, blue, cand, size, stats, elapsed) -> dict:
    rect = cand.rect
    recount = NaiveCounter(red).count_closed(rect)
    if recount != size or count_open_interior(blue, rect) != 0:
        raise AssertionError("certificate failed re-validation")
    return {
        "problem": problem,
        "objective": size,
        "certificate": {
            "direction": [rect.dir.dx, rect.dir.dy],
            "u_lo": rational_str(rect.u_lo),
            "u_hi": rational_str(rect.u_hi),
            "v_lo": rational_str(rect.v_lo),
            "v_hi": rational_str(rect.v_hi),
            "anchors": {"p": _point_json(cand.p), "q": _point_json(cand.q)},
            "supports": {
                "left": _point_json(cand.left),
                "right": _point_json(cand.right),
                "top": _point_json(cand.top),
            },
        },
        "stats": dict(stats, wall_time_s=round(elapsed, 6)),
    }


def _cmd_mrr(args) -> int:
    red, blue = instances.load_instance(args.input, "mrr")
    counter = build_counter(red, args.counter)
    start = time.perf_counter()
    cand, size, stats = rotating.solve_mrr(red, blue, counter)
    sol = _mrr_solution("mrr", red, blue, cand, size, stats,
                        time.perf_counter() - start)
    _write_output(json.dumps(sol, indent=1) + "\n", args.output)
    return 0


def _cmd_mrr_axis(args) -> int:
    red, blue = instances.load_instance(args.input, "mrr-axis")
    inst = axis.validate_axis_instance(red, blue)
    counter = build_counter(red, args.counter)
    start = time.perf_counter()
    rect, size = axis.solve_axis_mrr(inst, counter)
    cand = rotating.CandidateRect(rect=rect, p=None, q=None)
    stats = {"candidates_enumerated": len(
        axis.enumerate_axis_candidates(list(inst.blue), inst.clip))}
    sol = _mrr_solution("mrr-axis", red, blue, cand, size, stats,
                        time.perf_counter() - start)
    _write_output(json.dumps(sol, indent=1) + "\n", args.output)
    return 0


def _cmd_maxcol(args) -> int:
    pairs = instances.load_instance(args.input, "maxcol")
    inst = maxcol.validate_pair_instance(pairs)
    start = time.perf_counter()
    cert = maxcol.solve_maxcol(inst)
    elapsed = time.perf_counter() - start
    colors = dict(cert.colors)
    in_half = [p for p, c in cert.colors
               if maxcol.halfplane_contains(cert.halfplane, cert.side, p)]
    reds = [p for p in in_half if colors[p] == "red"]
    blues = [p for p in in_half if colors[p] == "blue"]
    if len(reds) != cert.eta or blues:
        raise AssertionError("certificate failed re-validation")
    sol = {
        "problem": "maxcol",
        "objective": cert.eta,
        "certificate": {
            "line": [cert.halfplane.a, cert.halfplane.b, cert.halfplane.c],
            "side": cert.side,
            "coloring": [{"point": [p.x, p.y], "color": c}
                         for p, c in cert.colors],
            "red_points_in_halfplane": [[p.x, p.y]
                                        for p in cert.red_in_halfplane],
        },
        "stats": {"wall_time_s": round(elapsed, 6)},
    }
    _write_output(json.dumps(sol, indent=1) + "\n", args.output)
    return 0


def _cmd_oracle(args) -> int:
    if args.which == "maxcol":
        pairs = instances.load_instance(args.input, "maxcol")
        maxcol.validate_pair_instance(pairs)
        objective = oracles.oracle_maxcol(pairs)
    elif args.which == "mrr":
        red, blue = instances.load_instance(args.input, "mrr")
        rotating.validate_rotating_instance(red, blue)
        objective = oracles.oracle_mrr(red, blue)
    else:
        red, blue = instances.load_instance(args.input, "mrr-axis")
        axis.validate_axis_instance(red, blue)
        objective = oracles.oracle_axis_mrr(red, blue)
    _write_output(json.dumps({"problem": args.which,
                              "objective": objective}) + "\n", args.output)
    return 0


def _cmd_gen(args) -> int:
    data = instances.gen_instance(args.problem, args.seed, args.n, args.m,
                                  args.coord_max)
    text = json.dumps(data, sort_keys=True, indent=1) + "\n"
    _write_output(text, args.output)
    return 0


def _cmd_render(args) -> int:
    with open(args.solution) as fh:
        sol = json.load(fh)
    problem = sol.get("problem")
    cert = sol["certificate"]
    if problem == "maxcol":
        pairs = instances.load_instance(args.input, "maxcol")
        colors = {Point(*e["point"]): e["color"] for e in cert["coloring"]}
        line = Line(*cert["line"])
        text = svg.render_maxcol(pairs, colors, line, cert["side"])
    elif problem in ("mrr", "mrr-axis"):
        red, blue = instances.load_instance(args.input, "mrr")
        bounds = tuple(float(parse_rational(cert[k]))
                       for k in ("u_lo", "u_hi", "v_lo", "v_hi"))
        text = svg.render_mrr(red, blue, tuple(cert["direction"]), bounds)
    else:
        raise instances.InvalidInstanceError(f"unknown problem {problem!r}")
    _write_output(text, args.output)
    return 0


def _cmd_verify(args) -> int:
    mismatches = []
    for i in range(args.count):
        seed_i = args.seed * 1000003 + i
        if args.problem == "maxcol":
            pairs = instances.gen_maxcol_instance(seed_i, args.n,
                                                  args.coord_max)
            got = maxcol.solve_maxcol(
                maxcol.validate_pair_instance(pairs)).eta
            want = oracles.oracle_maxcol(pairs)
        elif args.problem == "mrr":
            red, blue = instances.gen_mrr_instance(seed_i, args.n, args.m,
                                                   args.coord_max)
            counter = build_counter(red, args.counter)
            got = rotating.solve_mrr(red, blue, counter)[1]
            want = oracles.oracle_mrr(red, blue)
        else:
            red, blue = instances.gen_mrr_instance(seed_i, args.n, args.m,
                                                   args.coord_max, axis=True)
            inst = axis.validate_axis_instance(red, blue)
            counter = build_counter(red, args.counter)
            got = axis.solve_axis_mrr(inst, counter)[1]
            want = oracles.oracle_axis_mrr(red, blue)
        if got != want:
            mismatches.append({"instance": i, "seed": seed_i,
                               "solver": got, "oracle": want})
            print(json.dumps(mismatches[-1]))
    summary = {"problem": args.problem, "instances": args.count,
               "mismatches": len(mismatches)}
    print(json.dumps(summary))
    return 1 if mismatches else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bichrome",
        description="Exact solvers for bichromatic rectangle and coloring problems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, counter=False):
        p.add_argument("--input", required=True)
        p.add_argument("--output", default=None)
        p.add_argument("--format", choices=["json"], default="json")
        if counter:
            p.add_argument("--counter", choices=["naive", "accel"],
                           default="naive")

    p = sub.add_parser("mrr", help="maximum red rectangle, any orientation")
    add_io(p, counter=True)
    p.set_defaults(func=_cmd_mrr)

    p = sub.add_parser("mrr-axis", help="maximum red rectangle, axis-parallel")
    add_io(p, counter=True)
    p.set_defaults(func=_cmd_mrr_axis)

    p = sub.add_parser("maxcol", help="maximum coloring over pair instances")
    add_io(p)
    p.set_defaults(func=_cmd_maxcol)

    p = sub.add_parser("oracle", help="brute-force reference solvers")
    p.add_argument("which", choices=list(instances.PROBLEMS))
    add_io(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate a random valid instance")
    p.add_argument("--problem", choices=list(instances.PROBLEMS),
                   default="mrr")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=8,
                   help="red count (pair count for maxcol)")
    p.add_argument("--m", type=int, default=8, help="blue count")
    p.add_argument("--coord-max", type=int, default=1000)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("render", help="render an instance + solution to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--solution", required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="solver vs oracle over seeded instances")
    p.add_argument("problem", choices=list(instances.PROBLEMS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=8,
                   help="red count (pair count for maxcol)")
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--coord-max", type=int, default=1000)
    p.add_argument("--counter", choices=["naive", "accel"], default="naive")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (instances.InvalidInstanceError, GeometryError,
            rotating.EmptyRedError, maxcol.EmptyInstanceError,
            axis.EmptyInstanceError, oracles.LimitExceededError,
            FileNotFoundError) as exc:
        _emit_error(exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
