"""Exact rational geometry kernel.

Coordinates are ``fractions.Fraction`` values; integral coordinates are kept as
plain ``int`` (also an exact rational) because every predicate is a polynomial
sign test and int arithmetic is several times faster than Fraction arithmetic.
"""
from __future__ import annotations

from decimal import Decimal
from functools import cmp_to_key
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple, Sequence, Union

from .errors import CollinearOverlapError, GeometryError

Scalar = Union[int, Fraction]


def scalar(value) -> Scalar:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions, and strings such as ``"3"``, ``"-0.25"`` or
    ``"7/3"``. Floats are rejected: they carry binary rounding already.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, float):
        raise TypeError("float coordinates are not exact; pass a string or Fraction")
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            value = Fraction(text)
        else:
            value = Fraction(Decimal(text))
    elif isinstance(value, Decimal):
        value = Fraction(value)
    elif not isinstance(value, Rational):
        raise TypeError(f"cannot convert {value!r} to an exact rational")
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def format_scalar(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Point(NamedTuple):
    x: Scalar
    y: Scalar

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(scalar(x), scalar(y))

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def scaled(self, t: Scalar) -> "Point":
        return Point(_norm(self.x * t), _norm(self.y * t))

    def __str__(self):
        return f"({format_scalar(self.x)}, {format_scalar(self.y)})"


class Ray(NamedTuple):
    """Ray with origin ``origin`` that contains the segment origin-through."""

    origin: Point
    through: Point


def _norm(v: Scalar) -> Scalar:
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def cross(o: Point, a: Point, b: Point) -> Scalar:
    """(a - o) x (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 for a left (counter-clockwise) turn p->q->r, -1 for right, 0 if collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def ray_segment_intersection(ray: Ray, a: Point, b: Point) -> Point | None:
    """Intersection of ``ray`` with the closed segment ``ab``.

    Returns None when they are disjoint or parallel. Raises
    :class:`CollinearOverlapError` when the ray and the segment share a line
    and overlap, which cannot happen for points in general position.
    """
    if a == b:
        raise GeometryError("degenerate segment")
    o, through = ray
    if o == through:
        raise GeometryError("degenerate ray")
    dx, dy = through[0] - o[0], through[1] - o[1]
    ex, ey = b[0] - a[0], b[1] - a[1]
    denom = dx * ey - dy * ex
    wx, wy = a[0] - o[0], a[1] - o[1]
    if denom == 0:
        if wx * dy - wy * dx != 0:
            return None
        # same line: overlap iff some endpoint sits at ray parameter >= 0
        if wx * dx + wy * dy >= 0 or (b[0] - o[0]) * dx + (b[1] - o[1]) * dy >= 0:
            raise CollinearOverlapError(f"ray {o}->{through} overlaps segment {a}-{b}")
        return None
    # o + lam*d = a + s*e
    lam = Fraction(wx * ey - wy * ex, denom)
    s = Fraction(wx * dy - wy * dx, denom)
    if lam < 0 or s < 0 or s > 1:
        return None
    return Point(_norm(a[0] + s * ex), _norm(a[1] + s * ey))


def point_in_triangle_interior(p: Point, a: Point, b: Point, c: Point) -> bool:
    s = orientation(a, b, c)
    if s == 0:
        raise GeometryError(f"degenerate triangle {a}, {b}, {c}")
    return orientation(a, b, p) == s and orientation(b, c, p) == s and orientation(c, a, p) == s


def convex_hull(points: Sequence[Point]) -> list[int]:
    """Indices of the hull vertices in counter-clockwise order (monotone chain).

    Starts from the lexicographically smallest point. Points lying on an open
    hull edge are not hull vertices.
    """
    if len(points) < 3:
        raise GeometryError("convex hull needs at least 3 points")
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    for i, j in zip(order, order[1:]):
        if points[i] == points[j]:
            raise GeometryError(f"duplicate point {points[i]}")

    def chain(idx):
        out: list[int] = []
        for i in idx:
            while len(out) >= 2 and orientation(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise GeometryError("all points are collinear")
    return hull


def polygon_signed_area2(vertices: Sequence[Point]) -> Scalar:
    """Twice the signed area (shoelace); positive for counter-clockwise order."""
    if len(vertices) < 3:
        raise GeometryError("polygon needs at least 3 vertices")
    total = 0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return _norm(total)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff segments ab and cd share a point other than a common endpoint.

    Covers proper crossings, T-contacts (an endpoint in the other's relative
    interior) and collinear overlaps.
    """
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        return True  # same segment twice
    if max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0]):
        return False
    if max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1]):
        return False
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)
    if shared:
        # touching at one endpoint: only a collinear overlap is a conflict
        if o1 == 0 and o2 == 0:
            p = shared.pop()
            q1 = b if a == p else a
            q2 = d if c == p else c
            return (q1[0] - p[0]) * (q2[0] - p[0]) + (q1[1] - p[1]) * (q2[1] - p[1]) > 0
        return False
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and on_segment(c, a, b))
        or (o2 == 0 and on_segment(d, a, b))
        or (o3 == 0 and on_segment(a, c, d))
        or (o4 == 0 and on_segment(b, c, d))
    )


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p collinear with ab assumed; True iff p lies in the closed segment."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_on_open_segment(p: Point, a: Point, b: Point) -> bool:
    return p != a and p != b and on_segment(p, a, b) and orientation(a, b, p) == 0


def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def angular_sort(origin: Point, others: Sequence[Point]) -> list[int]:
    """Positions of ``others`` sorted counter-clockwise by exact angle around ``origin``.

    Angles run from the positive x axis over [0, 2pi).
    """
    dirs = [(q[0] - origin[0], q[1] - origin[1]) for q in others]

    def cmp(i, j):
        a, b = dirs[i], dirs[j]
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return ha - hb
        c = a[0] * b[1] - a[1] * b[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(range(len(others)), key=cmp_to_key(cmp))
