import math
import random

import pytest

from equigon.geom import Point, side_of_line
from equigon.polygon import RegularPolygon, from_shared_vertex, rotate_about_centroid
from equigon.power_sums import compare_power_sums, distances_squared, multisets_equal
from equigon.equalizer import (
    Locus,
    MatchKind,
    MixedVertexCountError,
    NoIntersectionError,
    NoMatchingError,
    NotSharedVertexError,
    NotTwoPointSolutionError,
    PairCase,
    align_rotation,
    classify_pair,
    correspondence,
    equal_distance_points,
    verify_point_properties,
)


def shared_square_pair():
    first = from_shared_vertex(Point(0, 0), Point(1, 1), 4, -1)
    second = from_shared_vertex(Point(0, 0), Point(-2, 2), 4, 1)
    return first, second


def random_shared_vertex_pair(rng, n):
    """Opposite-orientation polygons sharing their first vertex, never tangent."""
    while True:
        vertex = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
        ang1 = rng.uniform(-math.pi, math.pi)
        ang2 = rng.uniform(-math.pi, math.pi)
        r1 = rng.uniform(0.3, 4.0)
        r2 = rng.uniform(0.3, 4.0)
        if abs(r1 - r2) < 1e-6 * max(r1, r2):
            continue
        if abs(math.sin(ang2 - ang1)) < 1e-4:
            continue  # nearly collinear centroids give a tangent contact
        c1 = vertex + Point(math.cos(ang1), math.sin(ang1)) * r1
        c2 = vertex + Point(math.cos(ang2), math.sin(ang2)) * r2
        o1 = rng.choice((1, -1))
        return (
            from_shared_vertex(vertex, c1, n, o1),
            from_shared_vertex(vertex, c2, n, -o1),
        )


def test_classify_pair_cases():
    base = RegularPolygon(5, Point(0, 0), 2.0, 0.1, 1)
    assert classify_pair(base, rotate_about_centroid(base, 1.0)) is PairCase.CONGRUENT_SAME_CENTROID
    shifted = RegularPolygon(5, Point(3, 1), 2.0, -0.4, -1)
    assert classify_pair(base, shifted) is PairCase.CONGRUENT_DISTINCT_CENTROIDS
    smaller = RegularPolygon(5, Point(0, 0), 1.0, 0.0, 1)
    assert classify_pair(base, smaller) is PairCase.NON_CONGRUENT
    # same radii count as congruent no matter how far apart the centroids are
    far = RegularPolygon(5, Point(50, 50), 2.0, 0.0, 1)
    assert classify_pair(base, far) is PairCase.CONGRUENT_DISTINCT_CENTROIDS


def test_classify_pair_rejects_mixed_vertex_counts():
    with pytest.raises(MixedVertexCountError):
        classify_pair(
            RegularPolygon(4, Point(0, 0), 1.0), RegularPolygon(5, Point(0, 0), 1.0)
        )


def test_congruent_cases_return_loci():
    base = RegularPolygon(6, Point(1, 1), 1.5, 0.2, 1)
    spun = rotate_about_centroid(base, 0.9)
    same = equal_distance_points(base, spun)
    assert same.case is PairCase.CONGRUENT_SAME_CENTROID
    assert same.locus is Locus.ENTIRE_PLANE
    assert same.points == ()
    moved = RegularPolygon(6, Point(4, -2), 1.5, 1.0, -1)
    apart = equal_distance_points(base, moved)
    assert apart.locus is Locus.PERPENDICULAR_BISECTOR
    assert apart.points == ()


def test_shared_square_pair_two_points_frozen():
    first, second = shared_square_pair()
    solution = equal_distance_points(first, second)
    assert solution.case is PairCase.NON_CONGRUENT
    assert not solution.coincident
    assert solution.m1.x == pytest.approx(-1.0, abs=1e-12)
    assert solution.m1.y == pytest.approx(3.0, abs=1e-12)
    assert solution.m2.x == pytest.approx(-1.8, abs=1e-12)
    assert solution.m2.y == pytest.approx(0.6, abs=1e-12)
    # both points sit on both swapped circles
    for point in solution.points:
        assert point.distance(second.centroid) == pytest.approx(first.circumradius, abs=1e-12)
        assert point.distance(first.centroid) == pytest.approx(second.circumradius, abs=1e-12)


def test_shared_square_distance_multisets_frozen():
    first, second = shared_square_pair()
    solution = equal_distance_points(first, second)
    at_m1_a = distances_squared(first.vertices(), solution.m1)
    at_m1_b = distances_squared(second.vertices(), solution.m1)
    assert at_m1_a.squared == pytest.approx((10.0, 2.0, 10.0, 18.0), abs=1e-12)
    assert at_m1_b.squared == pytest.approx((10.0, 2.0, 10.0, 18.0), abs=1e-12)
    at_m2_a = distances_squared(first.vertices(), solution.m2)
    at_m2_b = distances_squared(second.vertices(), solution.m2)
    assert at_m2_a.squared == pytest.approx((3.6, 5.2, 16.4, 14.8), abs=1e-12)
    assert at_m2_b.squared == pytest.approx((3.6, 14.8, 16.4, 5.2), abs=1e-12)
    assert multisets_equal(at_m2_a, at_m2_b).equal


def test_disjoint_pair_has_no_points():
    first = RegularPolygon(4, Point(0, 0), 1.0, 0.0, 1)
    second = RegularPolygon(4, Point(10, 0), 2.0, 0.0, -1)
    solution = equal_distance_points(first, second)
    assert solution.points == ()
    assert solution.locus is None


def test_tangent_collinear_family_single_point():
    first = from_shared_vertex(Point(0, 0), Point(1, 0), 4, 1)
    second = from_shared_vertex(Point(0, 0), Point(3, 0), 4, -1)
    solution = equal_distance_points(first, second)
    assert solution.coincident
    assert solution.m1.distance(Point(4, 0)) < 1e-12
    assert solution.m2.distance(Point(4, 0)) < 1e-12


def test_correspondence_identity_and_reversal_frozen():
    first, second = shared_square_pair()
    solution = equal_distance_points(first, second)
    at_m1 = correspondence(first, second, solution.m1)
    assert at_m1.kind is MatchKind.IDENTITY
    assert at_m1.max_residual < 1e-12
    assert at_m1.first_residual < 1e-12
    assert at_m1.model_ok
    at_m2 = correspondence(first, second, solution.m2)
    assert at_m2.kind is MatchKind.REVERSAL
    assert at_m2.max_residual < 1e-12
    assert at_m2.model_ok


def test_correspondence_middle_index_pairs_with_itself():
    rng = random.Random(7)
    first, second = random_shared_vertex_pair(rng, 6)
    solution = equal_distance_points(first, second)
    at_m2 = correspondence(first, second, solution.m2)
    assert at_m2.kind is MatchKind.REVERSAL
    # reversal sends k=4 to 6+2-4=4 for hexagons
    k4 = abs(solution.m2.distance(first.vertex(4)) - solution.m2.distance(second.vertex(4)))
    assert k4 < 1e-9 * max(first.circumradius, second.circumradius)


def test_correspondence_rejects_unrelated_point():
    first, second = shared_square_pair()
    with pytest.raises(NoMatchingError):
        correspondence(first, second, Point(7.0, -3.0))


def test_align_rotation_fixed_point():
    # a polygon already satisfying the distance constraint reappears among the candidates
    poly = RegularPolygon(5, Point(2, 1), 1.5, 0.6, 1)
    probe = Point(-1.0, 0.5)
    want = probe.distance(poly.vertex(1))
    candidates = align_rotation(poly, probe, want)
    assert len(candidates) == 2
    assert any(abs(c.phase - poly.phase) < 1e-9 for c in candidates)
    for c in candidates:
        assert probe.distance(c.vertex(1)) == pytest.approx(want, abs=1e-9)
        assert c.centroid == poly.centroid
        assert c.circumradius == poly.circumradius
        assert c.orientation == poly.orientation


def test_align_rotation_zero_distance_degenerate():
    poly = RegularPolygon(4, Point(0, 0), 2.0, 0.0, 1)
    on_circle = Point(0.0, 2.0)
    candidates = align_rotation(poly, on_circle, 0.0)
    assert len(candidates) == 1
    assert candidates[0].vertex(1).distance(on_circle) < 1e-12


def test_align_rotation_unreachable_distance():
    poly = RegularPolygon(4, Point(0, 0), 1.0, 0.0, 1)
    with pytest.raises(NoIntersectionError):
        align_rotation(poly, Point(10.0, 0.0), 1.0)


def test_alignment_then_full_multiset_equality():
    # no shared vertex: pick a solution point, align the second polygon's first
    # vertex to the right distance, and the whole distance lists must agree
    rng = random.Random(3)
    for n in (3, 5, 8):
        r1, r2 = 2.0, 1.2
        gap = 0.8 * (r1 + r2)
        first = RegularPolygon(n, Point(0, 0), r1, rng.uniform(-3, 3), 1)
        second = RegularPolygon(n, Point(gap, 0.3), r2, rng.uniform(-3, 3), -1)
        solution = equal_distance_points(first, second)
        assert len(solution.points) == 2
        point = solution.m1
        want = point.distance(first.vertex(1))
        candidates = align_rotation(second, point, want)
        assert candidates
        matched = 0
        for candidate in candidates:
            da = distances_squared(first.vertices(), point)
            db = distances_squared(candidate.vertices(), point)
            if multisets_equal(da, db).equal:
                matched += 1
                assert correspondence(first, candidate, point).kind in (
                    MatchKind.IDENTITY,
                    MatchKind.REVERSAL,
                )
        assert matched == len(candidates)


def test_point_properties_frozen_pair():
    first, second = shared_square_pair()
    solution = equal_distance_points(first, second)
    report = verify_point_properties(first, second, solution)
    assert report.ok
    assert not report.coincident
    names = [entry.name for entry in report.entries]
    assert names == [
        "midpoint_of_diametric_points",
        "even_n_vertex_midpoint",
        "mirror_point_bisector_parallel",
        "separation_equals_vertex_offset",
        "quadrilateral_side_lengths",
        "separation_perpendicular",
    ]
    assert all(not entry.vacuous for entry in report.entries)
    assert report.entry("midpoint_of_diametric_points").residual < 1e-12
    # |M1 M2| equals the distance from the shared vertex to the line D1 D2
    assert solution.m1.distance(solution.m2) == pytest.approx(math.sqrt(6.4), abs=1e-12)


def test_point_properties_odd_n_marks_even_check_vacuous():
    rng = random.Random(11)
    first, second = random_shared_vertex_pair(rng, 5)
    report = verify_point_properties(first, second, equal_distance_points(first, second))
    assert report.ok
    assert report.entry("even_n_vertex_midpoint").vacuous


def test_point_properties_tangent_family_vacuous_entries():
    first = from_shared_vertex(Point(0, 0), Point(1, 0), 5, 1)
    second = from_shared_vertex(Point(0, 0), Point(3, 0), 5, -1)
    solution = equal_distance_points(first, second)
    assert solution.coincident
    report = verify_point_properties(first, second, solution)
    assert report.ok
    assert report.coincident
    assert report.entry("mirror_point_bisector_parallel").vacuous
    assert report.entry("separation_equals_vertex_offset").vacuous
    assert report.entry("separation_perpendicular").vacuous
    assert not report.entry("midpoint_of_diametric_points").vacuous


def test_point_properties_precondition_errors():
    first, second = shared_square_pair()
    solution = equal_distance_points(first, second)
    stranger = RegularPolygon(4, Point(9, 9), 1.0, 0.0, 1)
    with pytest.raises(NotSharedVertexError):
        verify_point_properties(first, stranger, solution)
    empty = equal_distance_points(
        RegularPolygon(4, Point(0, 0), 1.0, 0.0, 1),
        RegularPolygon(4, Point(10, 0), 2.0, 0.0, -1),
    )
    with pytest.raises(NotTwoPointSolutionError):
        verify_point_properties(first, second, empty)


def test_m1_labelling_matches_identity_point_random():
    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(3, 12)
        first, second = random_shared_vertex_pair(rng, n)
        solution = equal_distance_points(first, second)
        assert len(solution.points) == 2
        scale = max(first.circumradius, second.circumradius)
        # M1 is the midpoint of the diametric points, M2 its mirror
        anchor = first.vertex(1)
        predicted = (first.centroid + second.centroid - anchor)
        assert solution.m1.distance(predicted) < 1e-9 * scale
        assert correspondence(first, second, solution.m1).kind is MatchKind.IDENTITY
        assert correspondence(first, second, solution.m2).kind is MatchKind.REVERSAL


def test_same_orientation_pair_still_gets_solution_points():
    # the two-point construction is orientation-blind; only the vertex
    # correspondence may fail to exist
    first = from_shared_vertex(Point(0, 0), Point(1.0, 0.7), 4, 1)
    second = from_shared_vertex(Point(0, 0), Point(-1.1, 1.3), 4, 1)
    solution = equal_distance_points(first, second)
    assert len(solution.points) == 2
    for point in solution.points:
        da = distances_squared(first.vertices(), point)
        db = distances_squared(second.vertices(), point)
        assert compare_power_sums(da, db).ok


def test_system_necessity_at_solution_points_and_failure_elsewhere():
    rng = random.Random(5)
    first, second = random_shared_vertex_pair(rng, 7)
    solution = equal_distance_points(first, second)
    for point in solution.points:
        da = distances_squared(first.vertices(), point)
        db = distances_squared(second.vertices(), point)
        assert compare_power_sums(da, db).ok
    off = Point(solution.m1.x + 0.37, solution.m1.y - 0.81)
    da = distances_squared(first.vertices(), off)
    db = distances_squared(second.vertices(), off)
    assert not compare_power_sums(da, db).ok


def test_m1_m2_are_mirror_images_across_centroid_line():
    rng = random.Random(17)
    first, second = random_shared_vertex_pair(rng, 9)
    solution = equal_distance_points(first, second)
    assert (
        side_of_line(solution.m1, first.centroid, second.centroid)
        * side_of_line(solution.m2, first.centroid, second.centroid)
        < 0.0
    )
