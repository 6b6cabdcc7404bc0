"""Triangle centers and central lines built from squared lengths only."""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    DegenerateInputError,
    GeometryError,
    Line,
    Point,
    UndefinedLineError,
    _is_float,
    _mag,
    _require_nonzero,
    line_through,
    midpoint,
    points_equal,
    vanishes,
)


class OnSideLineError(GeometryError):
    pass


class OnCircumcircleError(GeometryError):
    pass


class PointAtInfinityError(GeometryError):
    pass


@dataclass(frozen=True)
class Triangle:
    u: Point
    v: Point
    w: Point

    def __iter__(self):
        yield self.u
        yield self.v
        yield self.w

    def side_lengths2(self):
        """Squared lengths of the sides opposite u, v, w."""
        return (self.v - self.w).norm2(), (self.u - self.w).norm2(), (self.u - self.v).norm2()

    def twice_area(self):
        return (self.v - self.u).cross(self.w - self.u)

    def map(self, fn) -> Triangle:
        return Triangle(fn(self.u), fn(self.v), fn(self.w))


@dataclass(frozen=True, eq=False)
class Barycentrics:
    x: object
    y: object
    z: object

    def __eq__(self, other):
        if not isinstance(other, Barycentrics):
            return NotImplemented
        a, b = (self.x, self.y, self.z), (other.x, other.y, other.z)
        return all(vanishes(a[i] * b[j] - a[j] * b[i]) for i, j in ((0, 1), (0, 2), (1, 2)))

    __hash__ = None


def _check_nondegenerate(t: Triangle):
    area = t.twice_area()
    scale = _mag(*t.u, *t.v, *t.w) ** 2 if _is_float(area) else 1.0
    _require_nonzero(area, DegenerateInputError("collinear triangle"), scale)
    return area


def centroid(t: Triangle) -> Point:
    return Point((t.u.x + t.v.x + t.w.x) / 3, (t.u.y + t.v.y + t.w.y) / 3)


def circumcenter(t: Triangle) -> Point:
    b = t.v - t.u
    c = t.w - t.u
    d = 2 * _check_nondegenerate(t)
    b2, c2 = b.norm2(), c.norm2()
    return Point(t.u.x + (c.y * b2 - b.y * c2) / d, t.u.y + (b.x * c2 - c.x * b2) / d)


def orthocenter(t: Triangle) -> Point:
    o = circumcenter(t)
    return Point(t.u.x + t.v.x + t.w.x - 2 * o.x, t.u.y + t.v.y + t.w.y - 2 * o.y)


def nine_point_center(t: Triangle) -> Point:
    o = circumcenter(t)
    h = Point(t.u.x + t.v.x + t.w.x - 2 * o.x, t.u.y + t.v.y + t.w.y - 2 * o.y)
    return midpoint(o, h)


def symmedian_point(t: Triangle) -> Point:
    # weights are the squared sides opposite each vertex
    _check_nondegenerate(t)
    lu, lv, lw = t.side_lengths2()
    s = lu + lv + lw
    _require_nonzero(s, DegenerateInputError("zero perimeter"))
    return Point((lu * t.u.x + lv * t.v.x + lw * t.w.x) / s, (lu * t.u.y + lv * t.v.y + lw * t.w.y) / s)


def _line_or_undefined(p: Point, q: Point, what: str) -> Line:
    if points_equal(p, q):
        raise UndefinedLineError(f"{what} is undefined: defining points coincide")
    return line_through(p, q)


def euler_line(t: Triangle) -> Line:
    return _line_or_undefined(centroid(t), circumcenter(t), "Euler line")


def brocard_axis(t: Triangle) -> Line:
    return _line_or_undefined(circumcenter(t), symmedian_point(t), "Brocard axis")


def barycentrics_of(p: Point, t: Triangle) -> Barycentrics:
    _check_nondegenerate(t)
    return Barycentrics((t.v - p).cross(t.w - p), (t.w - p).cross(t.u - p), (t.u - p).cross(t.v - p))


def point_from_barycentrics(b: Barycentrics, t: Triangle) -> Point:
    s = b.x + b.y + b.z
    scale = _mag(b.x, b.y, b.z) if _is_float(s) else 1.0
    _require_nonzero(s, PointAtInfinityError("barycentric weights sum to zero"), scale)
    return Point((b.x * t.u.x + b.y * t.v.x + b.z * t.w.x) / s, (b.x * t.u.y + b.y * t.v.y + b.z * t.w.y) / s)


def isogonal_conjugate_in_triangle(p: Point, t: Triangle) -> Point:
    b = barycentrics_of(p, t)
    scale = _mag(b.x, b.y, b.z) if _is_float(b.x) else 1.0
    for coord in (b.x, b.y, b.z):
        _require_nonzero(coord, OnSideLineError("point lies on a side line"), scale)
    lu, lv, lw = t.side_lengths2()
    conj = Barycentrics(lu * b.y * b.z, lv * b.x * b.z, lw * b.x * b.y)
    try:
        return point_from_barycentrics(conj, t)
    except PointAtInfinityError:
        raise OnCircumcircleError("point lies on the circumcircle") from None
