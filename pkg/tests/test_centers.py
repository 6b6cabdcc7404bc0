from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from rectgeom.centers import (
    Barycentrics,
    OnSideLineError,
    PointAtInfinityError,
    Triangle,
    barycentrics_of,
    brocard_axis,
    centroid,
    circumcenter,
    euler_line,
    isogonal_conjugate_in_triangle,
    nine_point_center,
    orthocenter,
    point_from_barycentrics,
    symmedian_point,
)
from rectgeom.exact_arith import RatFun
from rectgeom.geometry import DegenerateInputError, Line, Point, is_on_line, midpoint, vanishes

RIGHT = Triangle(Point(0, 0), Point(0, 2), Point(3, 2))
ISO = Triangle(Point(0, 0), Point(2, 0), Point(0, 2))

coord = st.fractions(min_value=-30, max_value=30, max_denominator=9)
pts = st.builds(Point, coord, coord)
triangles = st.builds(Triangle, pts, pts, pts).filter(lambda t: t.twice_area() != 0)


def _symbolic_pab():
    a, b, c, _ = RatFun.variables(4)
    return Triangle(Point(a * 0, a * 0), Point(a, b), Point(c, b)), (a, b, c)


def test_centroid():
    assert centroid(Triangle(Point(0, 0), Point(1, 2), Point(3, 2))) == Point(F(4, 3), F(4, 3))
    assert centroid(Triangle(Point(0, 0), Point(3, 0), Point(0, 3))) == Point(1, 1)
    t, (a, b, c) = _symbolic_pab()
    g = centroid(t)
    assert g.x == (a + c) / 3 and g.y == 2 * b / 3


def test_circumcenter():
    assert circumcenter(RIGHT) == Point(F(3, 2), 1)
    assert circumcenter(ISO) == Point(1, 1)
    t, (a, b, c) = _symbolic_pab()
    o = circumcenter(t)
    assert o.x == (a + c) / 2 and o.y == (b * b - a * c) / (2 * b)
    with pytest.raises(DegenerateInputError):
        circumcenter(Triangle(Point(0, 0), Point(1, 1), Point(2, 2)))


def test_orthocenter_and_nine_point_center():
    assert orthocenter(RIGHT) == Point(0, 2)
    assert orthocenter(ISO) == Point(0, 0)
    assert nine_point_center(RIGHT) == Point(F(3, 4), F(3, 2))
    assert nine_point_center(ISO) == Point(F(1, 2), F(1, 2))


def test_symmedian_point():
    assert symmedian_point(RIGHT) == Point(F(6, 13), F(17, 13))
    assert symmedian_point(ISO) == Point(F(1, 2), F(1, 2))
    t, (a, b, c) = _symbolic_pab()
    s = symmedian_point(t)
    den = 2 * a * a - 2 * a * c + 2 * b * b + 2 * c * c
    assert s.x == (a * a * c + a * b * b + a * c * c + b * b * c) / den


def test_central_lines():
    assert euler_line(RIGHT) == Line(2, 3, -6)
    assert euler_line(ISO) == Line(1, -1, 0)
    assert brocard_axis(RIGHT) == Line(8, 27, -39)
    assert brocard_axis(ISO) == Line(1, -1, 0)


def test_barycentrics():
    t = Triangle(Point(0, 0), Point(1, 2), Point(3, 2))
    assert barycentrics_of(centroid(t), t) == Barycentrics(1, 1, 1)
    assert barycentrics_of(t.u, t) == Barycentrics(1, 0, 0)
    i = Point(2, F(7, 2))
    assert point_from_barycentrics(barycentrics_of(i, t), t) == i
    with pytest.raises(PointAtInfinityError):
        point_from_barycentrics(Barycentrics(1, -1, 0), t)


def test_isogonal_conjugate_examples():
    t = Triangle(Point(0, 0), Point(1, 3), Point(4, 1))
    assert isogonal_conjugate_in_triangle(circumcenter(t), t) == orthocenter(t) == Point(F(14, 11), F(21, 11))
    assert isogonal_conjugate_in_triangle(centroid(RIGHT), RIGHT) == Point(F(6, 13), F(17, 13))
    incircle = Triangle(Point(0, 0), Point(3, 0), Point(0, 4))
    assert isogonal_conjugate_in_triangle(Point(1, 1), incircle) == Point(1, 1)


def test_isogonal_conjugate_on_side_line():
    # the circumcenter of a right triangle sits on the hypotenuse
    with pytest.raises(OnSideLineError):
        isogonal_conjugate_in_triangle(circumcenter(RIGHT), RIGHT)


def test_symbolic_altitudes_are_perpendicular():
    t, _ = _symbolic_pab()
    h = orthocenter(t)
    assert ((h - t.u).dot(t.w - t.v)).is_zero()
    assert ((h - t.v).dot(t.w - t.u)).is_zero()


def test_symbolic_nine_point_center_equidistant():
    t, _ = _symbolic_pab()
    n = nine_point_center(t)
    r = [(midpoint(p, q) - n).norm2() for p, q in ((t.u, t.v), (t.v, t.w), (t.w, t.u))]
    assert (r[0] - r[1]).is_zero() and (r[1] - r[2]).is_zero()


def test_symbolic_central_lines_contain_centers():
    t, _ = _symbolic_pab()
    assert is_on_line(orthocenter(t), euler_line(t))
    assert is_on_line(symmedian_point(t), brocard_axis(t))


@settings(max_examples=200)
@given(triangles)
def test_central_lines_contain_centers(t):
    assume(centroid(t) != circumcenter(t) and symmedian_point(t) != circumcenter(t))
    assert is_on_line(orthocenter(t), euler_line(t))
    assert is_on_line(circumcenter(t), brocard_axis(t))
    ft = t.map(Point.to_float)
    h = orthocenter(ft)
    e = euler_line(ft)
    assert vanishes(e.at(h), max(abs(h.x), abs(h.y), 1.0) * max(abs(e.u), abs(e.v), abs(e.w)))


def _rotate(p: Point) -> Point:
    # exact rotation by the 3-4-5 angle, then a rational shift
    return Point(F(3, 5) * p.x - F(4, 5) * p.y + F(1, 7), F(4, 5) * p.x + F(3, 5) * p.y - 2)


@settings(max_examples=100)
@given(triangles)
def test_centers_are_equivariant(t):
    moved = t.map(_rotate)
    for center in (centroid, circumcenter, orthocenter, nine_point_center, symmedian_point):
        assert center(moved) == _rotate(center(t))


def _conjugate_defined(p, t):
    try:
        return isogonal_conjugate_in_triangle(p, t)
    except (OnSideLineError, ValueError):
        return None


@settings(max_examples=100)
@given(triangles, pts)
def test_isogonal_conjugate_is_involution(t, p):
    q = _conjugate_defined(p, t)
    assume(q is not None)
    back = _conjugate_defined(q, t)
    assume(back is not None)
    assert back == p


@settings(max_examples=100)
@given(triangles)
def test_symmedian_is_conjugate_of_centroid(t):
    assert symmedian_point(t) == isogonal_conjugate_in_triangle(centroid(t), t)
