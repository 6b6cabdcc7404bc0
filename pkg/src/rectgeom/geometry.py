"""Points, lines and circles over an exact or floating scalar field.

Scalars may be ``Fraction``, :class:`~rectgeom.exact_arith.RatFun` or ``float``.
Exact predicates test for an exact zero (for rational functions: the numerator
is the zero polynomial). Floats are compared with a relative tolerance and are
only used for cross-checks and drawing.
"""
from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .exact_arith import MultiPoly, RatFun, _pack, _table, _unpack, common_denominator

FLOAT_TOL = 1e-9


class GeometryError(ValueError):
    pass


class DegenerateInputError(GeometryError):
    pass


class NoUniqueIntersectionError(GeometryError):
    pass


class IdenticalCirclesError(GeometryError):
    pass


class TangentCirclesError(GeometryError):
    pass


class UndefinedLineError(GeometryError):
    pass


# -- scalar helpers --------------------------------------------------------

_assumptions: contextvars.ContextVar[list | None] = contextvars.ContextVar("assumptions", default=None)


@contextlib.contextmanager
def record_assumptions():
    """Collect every polynomial that a construction required to be nonzero."""
    found: list[MultiPoly] = []
    token = _assumptions.set(found)
    try:
        yield found
    finally:
        _assumptions.reset(token)


def _mag(*xs) -> float:
    return max([1.0] + [abs(x) for x in xs])


def vanishes(value, scale: float = 1.0) -> bool:
    if isinstance(value, RatFun):
        return value.num.is_zero()
    if isinstance(value, float):
        return abs(value) <= FLOAT_TOL * scale
    return value == 0


def _require_nonzero(value, exc: GeometryError, scale: float = 1.0):
    if vanishes(value, scale):
        raise exc
    if isinstance(value, RatFun):
        found = _assumptions.get()
        if found is not None and not value.num.is_constant():
            found.append(value.num)


def _is_float(*xs) -> bool:
    return any(isinstance(x, float) for x in xs)


def to_float(x) -> float:
    if isinstance(x, RatFun):
        raise TypeError("symbolic scalar has no float value")
    return float(x)


# -- primitives ------------------------------------------------------------

def _promote_ints(obj):
    # plain ints would silently turn into floats under true division
    for name in obj.__dataclass_fields__:
        if type(getattr(obj, name)) is int:
            object.__setattr__(obj, name, Fraction(getattr(obj, name)))


@dataclass(frozen=True)
class Point:
    x: object
    y: object

    def __post_init__(self):
        _promote_ints(self)

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k) -> Point:
        return Point(self.x / k, self.y / k)

    def cross(self, other: Point):
        return self.x * other.y - self.y * other.x

    def dot(self, other: Point):
        return self.x * other.x + self.y * other.y

    def norm2(self):
        return self.x * self.x + self.y * self.y

    def to_float(self) -> Point:
        return Point(to_float(self.x), to_float(self.y))

    def map(self, fn) -> Point:
        return Point(fn(self.x), fn(self.y))

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True, eq=False)
class Line:
    """The locus u*x + v*y + w = 0; equality is up to a common nonzero factor."""

    u: object
    v: object
    w: object

    def __post_init__(self):
        _promote_ints(self)

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return lines_equal(self, other)

    __hash__ = None

    def at(self, p: Point):
        return self.u * p.x + self.v * p.y + self.w

    def to_float(self) -> Line:
        return Line(to_float(self.u), to_float(self.v), to_float(self.w))

    def map(self, fn) -> Line:
        return Line(fn(self.u), fn(self.v), fn(self.w))

    def slope_intercept(self):
        """(slope, intercept) of y = slope*x + intercept; v must be nonzero."""
        return -self.u / self.v, -self.w / self.v


@dataclass(frozen=True)
class Circle:
    """The locus x^2 + y^2 + D*x + E*y + F = 0."""

    D: object
    E: object
    F: object

    def __post_init__(self):
        _promote_ints(self)

    def at(self, p: Point):
        return p.x * p.x + p.y * p.y + self.D * p.x + self.E * p.y + self.F

    @property
    def center(self) -> Point:
        return Point(-self.D / 2, -self.E / 2)

    def radius2(self):
        return (self.D * self.D + self.E * self.E) / 4 - self.F

    def to_float(self) -> Circle:
        return Circle(to_float(self.D), to_float(self.E), to_float(self.F))

    def map(self, fn) -> Circle:
        return Circle(fn(self.D), fn(self.E), fn(self.F))


def make_line(u, v, w) -> Line:
    """Build a line in a canonical scaling where one exists.

    Rational lines become primitive integer triples with the first nonzero of
    (u, v) positive. Rational-function lines are cleared to polynomial
    coefficients sharing no integer content or monomial factor.
    """
    if isinstance(u, RatFun) or isinstance(v, RatFun) or isinstance(w, RatFun):
        return _clear_ratfun_line(u, v, w)
    if _is_float(u, v, w):
        return Line(u, v, w)
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    m = lcm(u.denominator, v.denominator, w.denominator)
    iu, iv, iw = (int(t * m) for t in (u, v, w))
    g = gcd(iu, iv, iw) or 1
    if iu < 0 or (iu == 0 and iv < 0):
        g = -g
    return Line(Fraction(iu // g), Fraction(iv // g), Fraction(iw // g))


def _clear_ratfun_line(u, v, w) -> Line:
    arity = next(t.arity for t in (u, v, w) if isinstance(t, RatFun))
    polys, _ = common_denominator([_lift(t, arity) for t in (u, v, w)])
    nonzero = [p for p in polys if not p.is_zero()]
    if nonzero:
        mins = None
        for p in nonzero:
            e = _unpack(p.monomial_gcd(), arity)
            mins = e if mins is None else tuple(map(min, mins, e))
        polys = [p.divide_monomial(_pack(mins)) for p in polys]
        cont = [p.content() for p in polys if not p.is_zero()]
        c = Fraction(gcd(*(c.numerator for c in cont)), lcm(*(c.denominator for c in cont)))
        if nonzero[0].leading_coefficient() < 0:
            c = -c
        polys = [p.scale(1 / c) for p in polys]
    return Line(*(RatFun.from_poly(p) for p in polys))


def _lift(x, arity: int) -> RatFun:
    return x if isinstance(x, RatFun) else RatFun.constant(x, arity)


def as_field(value, like):
    """Lift an int/Fraction constant into the scalar field of ``like``."""
    if isinstance(like, RatFun):
        return RatFun.constant(value, like.arity)
    if isinstance(like, float):
        return float(value)
    return Fraction(value)


# -- operations ------------------------------------------------------------

def points_equal(p: Point, q: Point) -> bool:
    scale = _mag(p.x, p.y, q.x, q.y) if _is_float(p.x, p.y, q.x, q.y) else 1.0
    return vanishes(p.x - q.x, scale) and vanishes(p.y - q.y, scale)


def line_through(p: Point, q: Point) -> Line:
    if points_equal(p, q):
        raise DegenerateInputError("line through coincident points")
    d = q - p
    _record_direction(d)
    return make_line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def _record_direction(d: Point):
    # a line needs (dx, dy) != 0; record the coordinate that certifies it
    if isinstance(d.x, RatFun) or isinstance(d.y, RatFun):
        nz = d.x if not vanishes(d.x) else d.y
        _require_nonzero(nz, DegenerateInputError("zero direction"))


def perpendicular_bisector(p: Point, q: Point) -> Line:
    if points_equal(p, q):
        raise DegenerateInputError("bisector of coincident points")
    d = q - p
    _record_direction(d)
    return make_line(d.x, d.y, (p.norm2() - q.norm2()) / 2)


def intersect_lines(l1: Line, l2: Line) -> Point:
    det = l1.u * l2.v - l2.u * l1.v
    scale = _mag(l1.u, l1.v) * _mag(l2.u, l2.v) if _is_float(det) else 1.0
    _require_nonzero(det, NoUniqueIntersectionError("lines are parallel or identical"), scale)
    x = (l1.v * l2.w - l2.v * l1.w) / det
    y = (l1.w * l2.u - l2.w * l1.u) / det
    return Point(x, y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def reflect_in_point(p: Point, c: Point) -> Point:
    return Point(2 * c.x - p.x, 2 * c.y - p.y)


def homogeneous(p: Point) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Polynomials (X, Y, Z) with p = (X/Z, Y/Z), sharing one denominator."""
    arity = next(t.arity for t in p if isinstance(t, RatFun))
    (x, y), exps = common_denominator([_lift(p.x, arity), _lift(p.y, arity)])
    return x, y, _table(arity).power(exps)


def _symbolic(*points: Point) -> bool:
    return any(isinstance(t, RatFun) for p in points for t in p)


def is_on_line(p: Point, l: Line) -> bool:
    if _symbolic(p) or isinstance(l.u, RatFun):
        arity = next(t.arity for t in (p.x, p.y, l.u, l.v, l.w) if isinstance(t, RatFun))
        if _symbolic(p):
            X, Y, Z = homogeneous(p)
        else:
            X, Y, Z = (RatFun.constant(t, arity).num for t in (p.x, p.y, 1))
        u, v, w = (_lift(t, arity) for t in (l.u, l.v, l.w))
        if u.den == v.den == w.den:
            return (u.num * X + v.num * Y + w.num * Z).is_zero()
        return vanishes(l.at(p))
    r = l.at(p)
    if _is_float(r):
        m = _mag(p.x, p.y)
        return vanishes(r, abs(l.u) * m + abs(l.v) * m + abs(l.w))
    return vanishes(r)


def orientation(p: Point, q: Point, r: Point):
    return (q - p).cross(r - p)


def are_collinear(p: Point, q: Point, r: Point) -> bool:
    if _symbolic(p, q, r):
        return _homogeneous_det(p, q, r).is_zero()
    det = orientation(p, q, r)
    if _is_float(det):
        return vanishes(det, _mag(p.x, p.y, q.x, q.y, r.x, r.y) ** 2)
    return vanishes(det)


def _homogeneous_det(*pts: Point) -> MultiPoly:
    # expanding along the cheapest row keeps the big-by-big products to one minor
    arity = next(t.arity for p in pts for t in p if isinstance(t, RatFun))
    rows = []
    for p in pts:
        if _symbolic(p):
            rows.append(homogeneous(p))
        else:
            rows.append(tuple(RatFun.constant(t, arity).num for t in (p.x, p.y, 1)))
    rows.sort(key=lambda r: sum(len(t) for t in r))
    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = rows
    return x1 * (y2 * z3 - y3 * z2) - y1 * (x2 * z3 - x3 * z2) + z1 * (x2 * y3 - x3 * y2)


def directions_parallel(d1: Point, d2: Point) -> bool:
    c = d1.cross(d2)
    if _is_float(c):
        return vanishes(c, _mag(d1.x, d1.y) * _mag(d2.x, d2.y))
    return vanishes(c)


def are_parallel(l1: Line, l2: Line) -> bool:
    return directions_parallel(Point(l1.u, l1.v), Point(l2.u, l2.v))


def lines_equal(l1: Line, l2: Line) -> bool:
    pairs = ((l1.u, l1.v, l2.u, l2.v), (l1.u, l1.w, l2.u, l2.w), (l1.v, l1.w, l2.v, l2.w))
    for a1, b1, a2, b2 in pairs:
        c = a1 * b2 - a2 * b1
        scale = _mag(a1, b1) * _mag(a2, b2) if _is_float(c) else 1.0
        if not vanishes(c, scale):
            return False
    return True


def project_onto_line(p: Point, l: Line) -> Point:
    n2 = l.u * l.u + l.v * l.v
    _require_nonzero(n2, DegenerateInputError("line has zero normal"))
    t = l.at(p) / n2
    return Point(p.x - t * l.u, p.y - t * l.v)


def reflect_over_line(p: Point, l: Line) -> Point:
    return reflect_in_point(p, project_onto_line(p, l))


def circle_through(p: Point, q: Point, r: Point) -> Circle:
    # Cramer on  D*x + E*y + F = -(x^2 + y^2)  for the three points
    if points_equal(p, q) or points_equal(q, r) or points_equal(p, r):
        raise DegenerateInputError("circle through coincident points")
    det = p.x * (q.y - r.y) - p.y * (q.x - r.x) + (q.x * r.y - r.x * q.y)
    scale = _mag(p.x, p.y, q.x, q.y, r.x, r.y) ** 2 if _is_float(det) else 1.0
    _require_nonzero(det, DegenerateInputError("circle through collinear points"), scale)
    sp, sq, sr = -p.norm2(), -q.norm2(), -r.norm2()
    D = (sp * (q.y - r.y) - p.y * (sq - sr) + (sq * r.y - sr * q.y)) / det
    E = (p.x * (sq - sr) - sp * (q.x - r.x) + (q.x * sr - r.x * sq)) / det
    F = (p.x * (q.y * sr - r.y * sq) - p.y * (q.x * sr - r.x * sq) + sp * (q.x * r.y - r.x * q.y)) / det
    return Circle(D, E, F)


def _on_circle(p: Point, c: Circle) -> bool:
    v = c.at(p)
    if _is_float(v):
        return vanishes(v, _mag(p.x, p.y, c.D, c.E, c.F) ** 2)
    return vanishes(v)


def circles_second_intersection(c1: Circle, c2: Circle, p: Point) -> Point:
    """Second common point of two circles known to pass through ``p``."""
    if not (_on_circle(p, c1) and _on_circle(p, c2)):
        raise DegenerateInputError("point is not on both circles")
    # the radical line passes through p; walk along it from p
    du, dv = c1.D - c2.D, c1.E - c2.E
    direction = Point(-dv, du)
    n2 = direction.norm2()
    scale = _mag(c1.D, c1.E, c2.D, c2.E) ** 2 if _is_float(n2) else 1.0
    if vanishes(n2, scale):
        raise IdenticalCirclesError("circles coincide")
    _require_nonzero(n2, IdenticalCirclesError("circles coincide"))
    lin = 2 * p.dot(direction) + c1.D * direction.x + c1.E * direction.y
    lscale = _mag(p.x, p.y, c1.D, c1.E) * _mag(direction.x, direction.y) if _is_float(lin) else 1.0
    _require_nonzero(lin, TangentCirclesError("circles are tangent at the given point"), lscale)
    t = -lin / n2
    return Point(p.x + t * direction.x, p.y + t * direction.y)


def _cmul(p: Point, q: Point) -> Point:
    return Point(p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x)


def is_isogonal_pair(v: Point, s1: Point, s2: Point, x: Point, y: Point) -> bool:
    """Whether lines vx and vy are symmetric in the bisectors of the angle s1-v-s2.

    With planar vectors read as complex numbers the condition is
    Im(p*q*conj(u*w)) == 0 for u, w the side directions and p, q the ray
    directions; flipping any direction flips the sign only.
    """
    u, w, p, q = s1 - v, s2 - v, x - v, y - v
    for d in (u, w, p, q):
        if points_equal(d, Point(d.x * 0, d.y * 0)):
            raise DegenerateInputError("zero-length direction at vertex")
    pq = _cmul(p, q)
    uw = _cmul(u, w)
    im = pq.y * uw.x - pq.x * uw.y
    if _is_float(im):
        scale = _mag(p.x, p.y) * _mag(q.x, q.y) * _mag(u.x, u.y) * _mag(w.x, w.y)
        return vanishes(im, scale)
    return vanishes(im)
