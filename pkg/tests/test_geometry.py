from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from rectgeom.exact_arith import RatFun
from rectgeom.geometry import (
    Circle,
    DegenerateInputError,
    IdenticalCirclesError,
    Line,
    NoUniqueIntersectionError,
    Point,
    TangentCirclesError,
    are_collinear,
    are_parallel,
    circle_through,
    circles_second_intersection,
    intersect_lines,
    is_isogonal_pair,
    is_on_line,
    line_through,
    make_line,
    midpoint,
    orientation,
    perpendicular_bisector,
    project_onto_line,
    reflect_in_point,
    reflect_over_line,
)

coord = st.fractions(min_value=-50, max_value=50, max_denominator=20)
pts = st.builds(Point, coord, coord)


def test_line_through_examples():
    assert line_through(Point(0, 0), Point(1, 1)) == Line(1, -1, 0)
    assert line_through(Point(2, 0), Point(2, 5)) == Line(1, 0, -2)
    euler = line_through(Point(1, F(4, 3)), Point(F(3, 2), 1))
    assert euler == Line(2, 3, -6)
    assert is_on_line(Point(0, 2), euler)


def test_line_through_coincident():
    with pytest.raises(DegenerateInputError):
        line_through(Point(1, 1), Point(1, 1))


def test_lines_are_canonical():
    l1 = make_line(F(4), F(-4), F(2))
    assert (l1.u, l1.v, l1.w) == (2, -2, 1)
    assert make_line(F(-1), F(1), F(0)) == Line(1, -1, 0)


def test_perpendicular_bisector():
    assert perpendicular_bisector(Point(0, 0), Point(1, 2)) == Line(2, 4, -5)
    assert perpendicular_bisector(Point(0, 0), Point(0, 2)) == Line(0, 1, -1)
    a, b, _, _ = RatFun.variables(4)
    sym = perpendicular_bisector(Point(0, 0), Point(a, b))
    assert sym == Line(2 * a, 2 * b, -(a * a + b * b))


def test_intersect_lines():
    d_a = Line(F(1, 2), 1, F(-5, 4))
    d_b = Line(F(3, 2), 1, F(-13, 4))
    assert intersect_lines(d_a, d_b) == Point(2, F(1, 4))
    assert intersect_lines(Line(1, 0, 0), Line(0, 1, 0)) == Point(0, 0)
    with pytest.raises(NoUniqueIntersectionError):
        intersect_lines(Line(1, -1, 0), Line(1, -1, 1))


def test_midpoint_and_point_reflection():
    assert midpoint(Point(0, 0), Point(2, 4)) == Point(1, 2)
    assert reflect_in_point(Point(0, 0), Point(2, F(7, 2))) == Point(4, 7)
    assert midpoint(Point(F(3, 2), 1), Point(0, 2)) == Point(F(3, 4), F(3, 2))


def test_predicates():
    assert are_collinear(Point(0, 0), Point(1, 1), Point(2, 2))
    assert are_collinear(Point(28, -42), Point(F(80, 27), F(49, 27)), Point(2, F(7, 2)))
    assert are_parallel(Line(1, -1, 0), Line(1, -1, 1))


def test_projection_and_reflection():
    bisector = Line(2, 4, -5)
    assert project_onto_line(Point(0, 0), bisector) == Point(F(1, 2), 1)
    assert reflect_over_line(Point(0, 0), Line(0, 1, -2)) == Point(0, 4)
    assert reflect_over_line(Point(0, 0), bisector) == Point(1, 2)


def test_circle_through():
    c = circle_through(Point(0, 0), Point(0, 2), Point(3, 2))
    assert (c.D, c.E, c.F) == (-3, -2, 0)
    assert c.center == Point(F(3, 2), 1)
    u = circle_through(Point(1, 0), Point(-1, 0), Point(0, 1))
    assert (u.D, u.E, u.F) == (0, 0, -1)
    with pytest.raises(DegenerateInputError):
        circle_through(Point(0, 0), Point(1, 1), Point(2, 2))


def test_second_intersection():
    c1, c2 = Circle(-2, 0, 0), Circle(0, -2, 0)
    assert circles_second_intersection(c1, c2, Point(0, 0)) == Point(1, 1)
    with pytest.raises(TangentCirclesError):
        circles_second_intersection(c1, Circle(-4, 0, 0), Point(0, 0))
    with pytest.raises(IdenticalCirclesError):
        circles_second_intersection(c1, Circle(-2, 0, 0), Point(0, 0))


def test_isogonal_pair():
    v, s1, s2 = Point(0, 0), Point(1, 0), Point(0, 1)
    assert is_isogonal_pair(v, s1, s2, Point(2, 1), Point(1, 2))
    assert not is_isogonal_pair(v, s1, s2, Point(2, 1), Point(2, 1))
    with pytest.raises(DegenerateInputError):
        is_isogonal_pair(v, v, s2, Point(2, 1), Point(1, 2))


def test_circumcenter_orthocenter_rays_are_isogonal():
    # H = (0, 2) is itself a vertex, so only the other two vertices give two proper rays
    p, q, r = Point(0, 0), Point(0, 2), Point(3, 2)
    o, h = Point(F(3, 2), 1), Point(0, 2)
    assert is_isogonal_pair(p, q, r, o, h)
    assert is_isogonal_pair(r, p, q, o, h)


@given(pts, pts)
def test_double_reflection_is_identity(p, q):
    assume(p != q)
    line = line_through(p, q)
    x = Point(p.x + 3, q.y - 1)
    assert reflect_over_line(reflect_over_line(x, line), line) == x


@given(pts, pts, pts)
def test_collinearity_is_symmetric(p, q, r):
    verdict = are_collinear(p, q, r)
    assert verdict == are_collinear(q, r, p) == are_collinear(r, q, p)


@given(pts, pts, st.fractions(min_value=-5, max_value=5, max_denominator=7))
def test_points_on_a_line_are_collinear(p, q, t):
    assert are_collinear(p, q, p + (q - p) * t)


@given(pts, pts, pts)
def test_float_agrees_with_exact(p, q, r):
    exact = orientation(p, q, r)
    assume(abs(exact) > F(1, 10**6))
    approx = orientation(p.to_float(), q.to_float(), r.to_float())
    assert (approx > 0) == (exact > 0)
    assert are_collinear(p.to_float(), q.to_float(), r.to_float()) is False
