import math

import pytest
from hypothesis import given, strategies as st

from equigon.geom import (
    DEFAULT_TOLERANCE,
    Circle,
    DegenerateLineError,
    DegenerateRayError,
    GeometryError,
    IntersectionKind,
    InvalidCircleError,
    Point,
    Tolerance,
    angle_at,
    circle_intersection,
    point_line_distance,
    project_onto_line,
    reflect_across_line,
    side_of_line,
    wrap_angle,
)

TOL = DEFAULT_TOLERANCE

finite_coords = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)
radii = st.floats(min_value=0.01, max_value=50.0, allow_nan=False)


def test_tolerance_defaults_and_semantics():
    assert TOL.rel == 1e-9
    assert TOL.abs == 1e-12
    assert TOL.eq(1.0, 1.0 + 5e-10)
    assert not TOL.eq(1.0, 1.0 + 5e-9)
    # the absolute floor dominates near zero
    assert TOL.eq(0.0, 5e-13)
    assert not TOL.eq(0.0, 5e-12)


def test_tolerance_rejects_nonpositive_parts():
    with pytest.raises(ValueError):
        Tolerance(rel=0.0)
    with pytest.raises(ValueError):
        Tolerance(abs=-1e-12)


def test_point_rejects_nonfinite():
    with pytest.raises(GeometryError):
        Point(math.nan, 0.0)
    with pytest.raises(GeometryError):
        Point(0.0, math.inf)


def test_circle_rejects_bad_radius():
    with pytest.raises(InvalidCircleError):
        Circle(Point(0, 0), -1.0)
    with pytest.raises(InvalidCircleError):
        Circle(Point(0, 0), math.nan)
    assert Circle(Point(0, 0), 0.0).radius == 0.0


def test_unit_circles_overlap():
    result = circle_intersection(Circle(Point(0, 0), 1.0), Circle(Point(1, 0), 1.0))
    assert result.kind is IntersectionKind.TWO_POINTS
    p, q = result.points
    assert p.x == pytest.approx(0.5, abs=1e-15)
    assert p.y == pytest.approx(0.8660254037844386, abs=1e-15)
    assert q.x == pytest.approx(0.5, abs=1e-15)
    assert q.y == pytest.approx(-0.8660254037844386, abs=1e-15)


def test_two_point_ordering_first_point_is_left_of_center_line():
    c1 = Circle(Point(-2.0, 1.0), 3.0)
    c2 = Circle(Point(1.5, -0.5), 2.0)
    result = circle_intersection(c1, c2)
    assert result.kind is IntersectionKind.TWO_POINTS
    p, q = result.points
    assert side_of_line(p, c1.center, c2.center) > 0.0
    assert side_of_line(q, c1.center, c2.center) < 0.0


def test_external_tangency():
    result = circle_intersection(Circle(Point(0, 0), 1.0), Circle(Point(2, 0), 1.0))
    assert result.kind is IntersectionKind.TANGENT
    (p,) = result.points
    assert p.x == pytest.approx(1.0, abs=1e-15)
    assert p.y == pytest.approx(0.0, abs=1e-15)


def test_internal_tangency():
    result = circle_intersection(Circle(Point(3, 0), 1.0), Circle(Point(1, 0), 3.0))
    assert result.kind is IntersectionKind.TANGENT
    (p,) = result.points
    assert p.x == pytest.approx(4.0, abs=1e-14)
    assert p.y == pytest.approx(0.0, abs=1e-14)


def test_disjoint_circles():
    result = circle_intersection(Circle(Point(0, 0), 1.0), Circle(Point(5, 0), 1.0))
    assert result.kind is IntersectionKind.DISJOINT
    assert result.points == ()
    # one circle nested inside the other
    nested = circle_intersection(Circle(Point(0, 0), 5.0), Circle(Point(1, 0), 1.0))
    assert nested.kind is IntersectionKind.DISJOINT


def test_concentric_same_radius_is_coincident():
    result = circle_intersection(Circle(Point(2, 2), 1.5), Circle(Point(2, 2), 1.5))
    assert result.kind is IntersectionKind.COINCIDENT


def test_concentric_different_radii_is_disjoint_not_error():
    result = circle_intersection(Circle(Point(2, 2), 1.0), Circle(Point(2, 2), 2.0))
    assert result.kind is IntersectionKind.DISJOINT


def test_near_tangent_clamps_to_tangent():
    # center gap short of r1 + r2 by far less than tolerance
    result = circle_intersection(Circle(Point(0, 0), 1.0), Circle(Point(2 + 1e-13, 0), 1.0))
    assert result.kind is IntersectionKind.TANGENT


def test_both_zero_radius_rejected():
    with pytest.raises(InvalidCircleError):
        circle_intersection(Circle(Point(0, 0), 0.0), Circle(Point(1, 0), 0.0))


def test_zero_radius_probe_circle():
    # a point-circle sitting on the other circle touches it
    result = circle_intersection(Circle(Point(1.0, 0.0), 0.0), Circle(Point(0, 0), 1.0))
    assert result.kind is IntersectionKind.TANGENT
    assert result.points[0].distance(Point(1.0, 0.0)) < 1e-12


@given(
    x1=finite_coords, y1=finite_coords, r1=radii,
    x2=finite_coords, y2=finite_coords, r2=radii,
)
def test_intersection_points_lie_on_both_circles(x1, y1, r1, x2, y2, r2):
    c1 = Circle(Point(x1, y1), r1)
    c2 = Circle(Point(x2, y2), r2)
    result = circle_intersection(c1, c2)
    scale = max(r1, r2, c1.center.distance(c2.center))
    for p in result.points:
        assert abs(p.distance(c1.center) - r1) <= 1e-7 * scale + 1e-9
        assert abs(p.distance(c2.center) - r2) <= 1e-7 * scale + 1e-9
    if result.kind is IntersectionKind.TWO_POINTS:
        p, q = result.points
        mirror = reflect_across_line(p, c1.center, c2.center)
        assert mirror.distance(q) <= 1e-7 * scale + 1e-9


@given(
    x1=finite_coords, y1=finite_coords, r1=radii,
    x2=finite_coords, y2=finite_coords, r2=radii,
)
def test_intersection_symmetric_up_to_swap(x1, y1, r1, x2, y2, r2):
    c1 = Circle(Point(x1, y1), r1)
    c2 = Circle(Point(x2, y2), r2)
    forward = circle_intersection(c1, c2)
    backward = circle_intersection(c2, c1)
    assert forward.kind is backward.kind
    scale = max(r1, r2, c1.center.distance(c2.center))
    for p in forward.points:
        assert min(p.distance(q) for q in backward.points) <= 1e-9 * scale + 1e-9


@given(
    angle=st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False),
    dx=finite_coords,
    dy=finite_coords,
)
def test_intersection_rigid_motion_invariance(angle, dx, dy):
    c1 = Circle(Point(0.0, 0.0), 2.0)
    c2 = Circle(Point(2.5, 0.5), 1.5)
    base = circle_intersection(c1, c2)
    shift = Point(dx, dy)
    moved = circle_intersection(
        Circle(c1.center.rotated(angle) + shift, c1.radius),
        Circle(c2.center.rotated(angle) + shift, c2.radius),
    )
    assert moved.kind is base.kind
    for p, q in zip(base.points, moved.points):
        assert (p.rotated(angle) + shift).distance(q) < 1e-8


def test_point_line_distance_basic_and_rotated():
    p, a, b = Point(1, 1), Point(0, 0), Point(1, 0)
    assert point_line_distance(p, a, b) == pytest.approx(1.0, abs=1e-15)
    angle = math.pi / 6
    assert point_line_distance(
        p.rotated(angle), a.rotated(angle), b.rotated(angle)
    ) == pytest.approx(1.0, abs=1e-12)


def test_point_line_distance_degenerate_line():
    with pytest.raises(DegenerateLineError):
        point_line_distance(Point(1, 1), Point(0, 0), Point(0, 0))


def test_project_and_reflect():
    foot = project_onto_line(Point(3, 4), Point(0, 0), Point(1, 0))
    assert (foot.x, foot.y) == pytest.approx((3.0, 0.0))
    mirror = reflect_across_line(Point(3, 4), Point(0, 0), Point(1, 0))
    assert (mirror.x, mirror.y) == pytest.approx((3.0, -4.0))


def test_angle_at_pentagon_step():
    vertex = Point(0, 0)
    p = Point(2, 0)
    q = Point(2 * math.cos(math.tau / 5), 2 * math.sin(math.tau / 5))
    assert angle_at(vertex, p, q) == pytest.approx(math.tau / 5, abs=1e-12)


def test_angle_at_is_unsigned_and_capped_at_pi():
    vertex = Point(1, 1)
    assert angle_at(vertex, Point(2, 1), Point(0, 1)) == pytest.approx(math.pi)
    a = angle_at(vertex, Point(2, 1), Point(1, 0))
    b = angle_at(vertex, Point(1, 0), Point(2, 1))
    assert a == b == pytest.approx(math.pi / 2)


def test_angle_at_degenerate_ray():
    with pytest.raises(DegenerateRayError):
        angle_at(Point(0, 0), Point(0, 0), Point(1, 0))


@given(
    scale=st.floats(min_value=0.01, max_value=1000.0, allow_nan=False),
    angle=st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False),
)
def test_angle_at_scale_and_rotation_invariant(scale, angle):
    vertex = Point(0.5, -0.25)
    p = Point(1.5, 0.75)
    q = Point(-0.5, 0.35)
    base = angle_at(vertex, p, q)
    moved = angle_at(
        vertex.rotated(angle),
        (vertex + (p - vertex) * scale).rotated(angle),
        (vertex + (q - vertex) * scale).rotated(angle),
    )
    assert moved == pytest.approx(base, abs=1e-9)


@given(theta=st.floats(min_value=-1000.0, max_value=1000.0, allow_nan=False))
def test_wrap_angle_range_and_consistency(theta):
    wrapped = wrap_angle(theta)
    assert -math.pi < wrapped <= math.pi
    assert math.cos(wrapped) == pytest.approx(math.cos(theta), abs=1e-9)
    assert math.sin(wrapped) == pytest.approx(math.sin(theta), abs=1e-9)
