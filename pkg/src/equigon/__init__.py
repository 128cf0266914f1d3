"""Equal-distance points for pairs of regular polygons.

The package constructs pairs of regular n-gons, locates the points whose
vertex-distance multisets agree, and verifies the identities behind them:
the closed form for power sums of squared vertex distances, multiset equality
through Newton's identities, the two-correspondence structure at the solution
points, and the generalized Bottema midpoint with its fixed vertex angles.
"""

from __future__ import annotations

from .geom import (
    DEFAULT_TOLERANCE,
    Circle,
    DegenerateLineError,
    DegenerateRayError,
    GeometryError,
    IntersectionKind,
    IntersectionResult,
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
from .polygon import (
    CoincidentVertexCentroidError,
    DegenerateSideError,
    InvalidRadiusError,
    InvalidVertexCountError,
    NotOnCircumcircleError,
    RegularPolygon,
    diametric_opposite,
    from_shared_vertex,
    from_side,
    rotate_about_centroid,
)
from .power_sums import (
    DistanceMultiset,
    LengthMismatchError,
    MultisetMatch,
    OrderOutOfRangeError,
    PowerSumIdentityReport,
    PowerSumsReport,
    compare_power_sums,
    distances_squared,
    multisets_equal,
    power_sum,
    power_sum_closed_form,
    power_sums_to_elementary,
    power_sums_vector,
    verify_power_sum_identity,
)
from .equalizer import (
    EqualDistanceSolution,
    Locus,
    MatchKind,
    Matching,
    MixedVertexCountError,
    NoIntersectionError,
    NoMatchingError,
    NotSharedVertexError,
    NotTwoPointSolutionError,
    PairCase,
    PropertyReport,
    align_rotation,
    classify_pair,
    correspondence,
    equal_distance_points,
    verify_point_properties,
)
from .bottema import (
    AngleEntry,
    BottemaResult,
    DegenerateTriangleError,
    IndependenceReport,
    bottema_construct,
    closed_form_midpoint,
    verify_independence,
    vertex_angles,
)
from .scenario import (
    Scenario,
    ScenarioError,
    ScenarioKind,
    ScenarioParseError,
    ScenarioValidationError,
    parse_scenario,
    serialize_scenario,
)
from .runner import Report, run_scenario, scenario_geometry
from .svgfig import render_svg

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLERANCE",
    "Circle",
    "Point",
    "Tolerance",
    "IntersectionKind",
    "IntersectionResult",
    "RegularPolygon",
    "DistanceMultiset",
    "MultisetMatch",
    "PowerSumIdentityReport",
    "PowerSumsReport",
    "EqualDistanceSolution",
    "Matching",
    "MatchKind",
    "PairCase",
    "Locus",
    "PropertyReport",
    "BottemaResult",
    "AngleEntry",
    "IndependenceReport",
    "GeometryError",
    "InvalidCircleError",
    "DegenerateLineError",
    "DegenerateRayError",
    "InvalidVertexCountError",
    "InvalidRadiusError",
    "CoincidentVertexCentroidError",
    "DegenerateSideError",
    "NotOnCircumcircleError",
    "OrderOutOfRangeError",
    "LengthMismatchError",
    "MixedVertexCountError",
    "NoIntersectionError",
    "NoMatchingError",
    "NotSharedVertexError",
    "NotTwoPointSolutionError",
    "DegenerateTriangleError",
    "Scenario",
    "ScenarioKind",
    "ScenarioError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "Report",
    "angle_at",
    "circle_intersection",
    "point_line_distance",
    "project_onto_line",
    "reflect_across_line",
    "side_of_line",
    "wrap_angle",
    "from_shared_vertex",
    "from_side",
    "rotate_about_centroid",
    "diametric_opposite",
    "distances_squared",
    "power_sum",
    "power_sums_vector",
    "power_sum_closed_form",
    "power_sums_to_elementary",
    "multisets_equal",
    "compare_power_sums",
    "verify_power_sum_identity",
    "classify_pair",
    "equal_distance_points",
    "align_rotation",
    "correspondence",
    "verify_point_properties",
    "bottema_construct",
    "closed_form_midpoint",
    "verify_independence",
    "vertex_angles",
    "parse_scenario",
    "serialize_scenario",
    "run_scenario",
    "scenario_geometry",
    "render_svg",
]
