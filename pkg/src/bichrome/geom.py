"""Exact planar primitives: integer points, canonical directions, rotated
frames, critical angles and point/line duality.

Everything here is integer or rational arithmetic; no value is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

# Ingested coordinates must satisfy |x|,|y| <= COORD_MAX so that every
# intermediate product (cross products of differences, frame coordinates)
# fits comfortably in 128 bits on ports to fixed-width integers.  Python
# ints are unbounded, so this is a portability contract, not a safety one.
COORD_MAX = 2 ** 20

CCW = 1
CW = -1
COLLINEAR = 0

LESS = -1
EQUAL = 0
GREATER = 1


class GeometryError(Exception):
    """Base class for all geometric contract violations."""


class EqualPointsError(GeometryError):
    pass


class VerticalLineError(GeometryError):
    pass


class GeneralPositionError(GeometryError):
    pass


class CoordinateRangeError(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)


def check_coordinate_range(points) -> None:
    """Reject any point outside the documented |coord| <= COORD_MAX bound."""
    for p in points:
        if abs(p.x) > COORD_MAX or abs(p.y) > COORD_MAX:
            raise CoordinateRangeError(
                f"coordinate out of range: ({p.x}, {p.y}), bound {COORD_MAX}"
            )


@dataclass(frozen=True)
class Direction:
    """A gcd-reduced nonzero integer vector; one representation per ray.

    A Direction names the frame rotated so its x-axis points along (dx, dy).
    Frame coordinates are unnormalized dot products, so they are scaled by
    |d| per frame, which never affects comparisons within one frame.
    """

    dx: int
    dy: int

    def __post_init__(self):
        if self.dx == 0 and self.dy == 0:
            raise ValueError("zero direction")
        g = gcd(abs(self.dx), abs(self.dy))
        if g != 1:
            object.__setattr__(self, "dx", self.dx // g)
            object.__setattr__(self, "dy", self.dy // g)

    def opposite(self) -> "Direction":
        return Direction(-self.dx, -self.dy)

    def perp_ccw(self) -> "Direction":
        return Direction(-self.dy, self.dx)

    def is_upper_half(self) -> bool:
        """True when the angle lies in [0, 180)."""
        return self.dy > 0 or (self.dy == 0 and self.dx > 0)


def axis_direction(dx: int, dy: int) -> Direction:
    """Canonical representative of an undirected axis: angle in [0, 180)."""
    d = Direction(dx, dy)
    return d if d.is_upper_half() else d.opposite()


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p): CCW, CW or COLLINEAR."""
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return CCW
    if cross < 0:
        return CW
    return COLLINEAR


def frame_coords(p: Point, d: Direction) -> tuple:
    """Coordinates of p in the frame whose x-axis points along d.

    u orders points exactly as rotated-x does, v as rotated-y does.
    """
    return (p.x * d.dx + p.y * d.dy, -p.x * d.dy + p.y * d.dx)


def critical_direction_x(a: Point, b: Point) -> Direction:
    """The axis (canonical, angle in [0,180)) at which a and b swap u-order.

    Perpendicular to a - b; the swap happens at this direction and its
    opposite, and nowhere else.
    """
    if a == b:
        raise EqualPointsError(f"critical direction of equal points {a}")
    w = b - a
    return axis_direction(-w.y, w.x)


def critical_direction_y(a: Point, b: Point) -> Direction:
    """The axis at which a and b swap v-order: parallel to a - b."""
    if a == b:
        raise EqualPointsError(f"critical direction of equal points {a}")
    w = b - a
    return axis_direction(w.x, w.y)


def compare_directions(d1: Direction, d2: Direction) -> int:
    """Total order by angle in [0, 360) starting at +x, counterclockwise."""
    h1 = 0 if d1.is_upper_half() else 1
    h2 = 0 if d2.is_upper_half() else 1
    if h1 != h2:
        return LESS if h1 < h2 else GREATER
    cross = d1.dx * d2.dy - d1.dy * d2.dx
    if cross > 0:
        return LESS
    if cross < 0:
        return GREATER
    return EQUAL


def direction_sort_key(d: Direction):
    """Exact sort key equivalent to compare_directions."""
    if d.is_upper_half():
        half = 0
        sector = 0 if d.dx > 0 else (1 if d.dx == 0 else 2)
    else:
        half = 1
        sector = 0 if d.dx < 0 else (1 if d.dx == 0 else 2)
    slope = Fraction(d.dy, d.dx) if d.dx != 0 else Fraction(0)
    return (half, sector, slope)


def direction_between(d1: Direction, d2: Direction) -> Direction:
    """Some exact direction strictly inside the CCW arc from d1 to d2.

    Requires the arc to be at most 180 degrees (always true for consecutive
    members of an antipodally closed event set).
    """
    if d1 == d2:
        raise ValueError("empty arc")
    if d1 == d2.opposite():
        return d1.perp_ccw()
    return Direction(d1.dx + d2.dx, d1.dy + d2.dy)


@dataclass(frozen=True)
class Line:
    """Integer line a*x + b*y + c = 0, gcd-reduced and sign-canonical."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate line")
        g = gcd(gcd(abs(self.a), abs(self.b)), abs(self.c))
        a, b, c = self.a // g, self.b // g, self.c // g
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def is_vertical(self) -> bool:
        return self.b == 0

    def y_at(self, x) -> Fraction:
        if self.b == 0:
            raise VerticalLineError("no y-value on a vertical line")
        return Fraction(-self.a * x - self.c, self.b)


def line_from_slope_intercept(m, c) -> Line:
    """Line y = m*x + c with rational m, c, cleared to integer coefficients."""
    m = Fraction(m)
    c = Fraction(c)
    den = m.denominator * c.denominator // gcd(m.denominator, c.denominator)
    return Line(m.numerator * (den // m.denominator), -den,
                c.numerator * (den // c.denominator))


def side_of_line(line: Line, x, y) -> int:
    """+1 above, -1 below, 0 on, for a non-vertical line."""
    if line.is_vertical():
        raise VerticalLineError("above/below undefined for a vertical line")
    val = y - line.y_at(x)
    return (val > 0) - (val < 0)


def dual_line(p: Point) -> Line:
    """Point (a, b) maps to the line y = a*x - b."""
    return Line(p.x, -1, -p.y)


def dual_point(line: Line) -> tuple:
    """Non-vertical line y = u*x - v maps back to the point (u, v)."""
    if line.is_vertical():
        raise VerticalLineError("vertical lines have no dual point")
    return (Fraction(-line.a, line.b), Fraction(line.c, line.b))
