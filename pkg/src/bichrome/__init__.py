"""Exact solvers for bichromatic planar optimization problems.

Maximum red rectangle (axis-parallel and arbitrary orientation) over
red/blue point sets, and maximum coloring of paired points via blue-free
halfplanes, each paired with independent brute-force oracles.
"""

from .axis import AxisInstance, enumerate_axis_candidates, solve_axis_mrr, \
    validate_axis_instance
from .geom import (
    CCW,
    COLLINEAR,
    CW,
    COORD_MAX,
    Direction,
    Line,
    Point,
    compare_directions,
    critical_direction_x,
    critical_direction_y,
    dual_line,
    dual_point,
    frame_coords,
    orientation,
)
from .maxcol import (
    ColoringCertificate,
    PairInstance,
    decide,
    dualize,
    k_level,
    solve_maxcol,
    validate_pair_instance,
)
from .rangecount import (
    KdCounter,
    NaiveCounter,
    OrientedRect,
    build_accelerated,
    build_counter,
    build_naive,
    count_open_interior,
)
from .rotating import (
    CandidateRect,
    Event,
    KineticOrder,
    anchored_candidates,
    build_events,
    solve_mrr,
    validate_rotating_instance,
)

__version__ = "0.1.0"
