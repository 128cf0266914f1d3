"""Scenario documents: one JSON file describing one configuration to verify.

A scenario carries the vertex count, a comparison tolerance, a seed for any
randomized sub-checks, and exactly one kind-specific block:

    pair            two fully specified polygons
    shared_vertex   two polygons pinned to a common first vertex
    bottema         a triangle with polygons erected on its apex sides
    identity_check  one polygon plus probe points for the closed-form sums

Parsing is strict: unknown fields are rejected, every number must be finite,
and parse -> serialize -> parse is exact (floats survive the JSON round trip).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping

from .geom import DEFAULT_TOLERANCE, Point, Tolerance


class ScenarioError(ValueError):
    pass


class ScenarioParseError(ScenarioError):
    pass


class ScenarioValidationError(ScenarioError):
    def __init__(self, field: str, message: str) -> None:
        super().__init__(message)
        self.field = field


class ScenarioKind(Enum):
    PAIR = "pair"
    SHARED_VERTEX = "shared_vertex"
    BOTTEMA = "bottema"
    IDENTITY_CHECK = "identity_check"


@dataclass(frozen=True)
class PairConfig:
    centroid1: Point
    r1: float
    phase1: float
    orient1: int
    centroid2: Point
    r2: float
    phase2: float
    orient2: int


@dataclass(frozen=True)
class SharedVertexConfig:
    vertex: Point
    centroid1: Point
    centroid2: Point
    orient1: int
    orient2: int


@dataclass(frozen=True)
class BottemaConfig:
    an: Point
    a1: Point
    bn: Point
    side1: int | None
    side2: int | None
    sweep_samples: int


@dataclass(frozen=True)
class IdentityCheckConfig:
    centroid: Point
    r: float
    phase: float
    orient: int
    probes: tuple[Point, ...]
    max_m: int | None


Config = PairConfig | SharedVertexConfig | BottemaConfig | IdentityCheckConfig


@dataclass(frozen=True)
class Scenario:
    kind: ScenarioKind
    n: int
    tolerance: Tolerance
    seed: int
    config: Config


def _reject_unknown(block: Mapping[str, Any], allowed: set[str], context: str) -> None:
    for key in block:
        if key not in allowed:
            raise ScenarioValidationError(
                key, f"unknown field {context}{key!r} (allowed: {sorted(allowed)})"
            )


def _require(block: Mapping[str, Any], field: str, context: str) -> Any:
    if field not in block:
        raise ScenarioValidationError(field, f"missing required field {context}{field!r}")
    return block[field]


def _number(value: Any, field: str) -> float:
    # bool is an int subclass; it is never a legitimate coordinate
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioValidationError(field, f"field {field!r} must be a number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise ScenarioValidationError(field, f"field {field!r} must be finite, got {value!r}")
    return out


def _integer(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioValidationError(field, f"field {field!r} must be an integer, got {value!r}")
    return value


def _orientation(value: Any, field: str) -> int:
    out = _integer(value, field)
    if out not in (1, -1):
        raise ScenarioValidationError(field, f"field {field!r} must be +1 or -1, got {value!r}")
    return out


def _point(value: Any, field: str) -> Point:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ScenarioValidationError(field, f"field {field!r} must be a pair [x, y], got {value!r}")
    return Point(_number(value[0], f"{field}[0]"), _number(value[1], f"{field}[1]"))


def _positive(value: Any, field: str) -> float:
    out = _number(value, field)
    if out <= 0.0:
        raise ScenarioValidationError(field, f"field {field!r} must be positive, got {value!r}")
    return out


def _parse_tolerance(value: Any) -> Tolerance:
    if value is None:
        return DEFAULT_TOLERANCE
    if not isinstance(value, dict):
        raise ScenarioValidationError("tolerance", "field 'tolerance' must be an object")
    _reject_unknown(value, {"rel", "abs"}, "tolerance.")
    rel = _positive(value["rel"], "tolerance.rel") if "rel" in value else DEFAULT_TOLERANCE.rel
    abs_ = _positive(value["abs"], "tolerance.abs") if "abs" in value else DEFAULT_TOLERANCE.abs
    return Tolerance(rel=rel, abs=abs_)


def _parse_pair(block: Mapping[str, Any]) -> PairConfig:
    fields = {"centroid1", "r1", "phase1", "orient1", "centroid2", "r2", "phase2", "orient2"}
    _reject_unknown(block, fields, "pair.")
    return PairConfig(
        centroid1=_point(_require(block, "centroid1", "pair."), "pair.centroid1"),
        r1=_positive(_require(block, "r1", "pair."), "pair.r1"),
        phase1=_number(_require(block, "phase1", "pair."), "pair.phase1"),
        orient1=_orientation(_require(block, "orient1", "pair."), "pair.orient1"),
        centroid2=_point(_require(block, "centroid2", "pair."), "pair.centroid2"),
        r2=_positive(_require(block, "r2", "pair."), "pair.r2"),
        phase2=_number(_require(block, "phase2", "pair."), "pair.phase2"),
        orient2=_orientation(_require(block, "orient2", "pair."), "pair.orient2"),
    )


def _parse_shared_vertex(block: Mapping[str, Any]) -> SharedVertexConfig:
    fields = {"vertex", "centroid1", "centroid2", "orient1", "orient2"}
    _reject_unknown(block, fields, "shared_vertex.")
    return SharedVertexConfig(
        vertex=_point(_require(block, "vertex", "shared_vertex."), "shared_vertex.vertex"),
        centroid1=_point(
            _require(block, "centroid1", "shared_vertex."), "shared_vertex.centroid1"
        ),
        centroid2=_point(
            _require(block, "centroid2", "shared_vertex."), "shared_vertex.centroid2"
        ),
        orient1=_orientation(_require(block, "orient1", "shared_vertex."), "shared_vertex.orient1"),
        orient2=_orientation(_require(block, "orient2", "shared_vertex."), "shared_vertex.orient2"),
    )


def _parse_bottema(block: Mapping[str, Any]) -> BottemaConfig:
    fields = {"an", "a1", "bn", "side1", "side2", "sweep_samples"}
    _reject_unknown(block, fields, "bottema.")
    side1 = block.get("side1")
    side2 = block.get("side2")
    samples = block.get("sweep_samples", 0)
    samples = _integer(samples, "bottema.sweep_samples")
    if samples < 0 or samples == 1:
        raise ScenarioValidationError(
            "sweep_samples", f"field 'bottema.sweep_samples' must be 0 or >= 2, got {samples}"
        )
    return BottemaConfig(
        an=_point(_require(block, "an", "bottema."), "bottema.an"),
        a1=_point(_require(block, "a1", "bottema."), "bottema.a1"),
        bn=_point(_require(block, "bn", "bottema."), "bottema.bn"),
        side1=None if side1 is None else _orientation(side1, "bottema.side1"),
        side2=None if side2 is None else _orientation(side2, "bottema.side2"),
        sweep_samples=samples,
    )


def _parse_identity_check(block: Mapping[str, Any], n: int) -> IdentityCheckConfig:
    fields = {"centroid", "r", "phase", "orient", "probes", "max_m"}
    _reject_unknown(block, fields, "identity_check.")
    probes_raw = _require(block, "probes", "identity_check.")
    if not isinstance(probes_raw, list) or not probes_raw:
        raise ScenarioValidationError(
            "probes", "field 'identity_check.probes' must be a non-empty list of points"
        )
    probes = tuple(
        _point(item, f"identity_check.probes[{i}]") for i, item in enumerate(probes_raw)
    )
    max_m = block.get("max_m")
    if max_m is not None:
        max_m = _integer(max_m, "identity_check.max_m")
        if not 1 <= max_m <= n - 1:
            raise ScenarioValidationError(
                "max_m", f"field 'identity_check.max_m' must lie in 1..{n - 1}, got {max_m}"
            )
    return IdentityCheckConfig(
        centroid=_point(_require(block, "centroid", "identity_check."), "identity_check.centroid"),
        r=_positive(_require(block, "r", "identity_check."), "identity_check.r"),
        phase=_number(block.get("phase", 0.0), "identity_check.phase"),
        orient=_orientation(block.get("orient", 1), "identity_check.orient"),
        probes=probes,
        max_m=max_m,
    )


def parse_scenario(text: str) -> Scenario:
    """Parse and validate a scenario document.

    Raises ScenarioParseError for malformed JSON (with position) and
    ScenarioValidationError (carrying the offending field name) for schema
    violations.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ScenarioValidationError("document", "top level must be a JSON object")

    kind_raw = _require(data, "kind", "")
    try:
        kind = ScenarioKind(kind_raw)
    except ValueError:
        raise ScenarioValidationError(
            "kind",
            f"unknown kind {kind_raw!r} (expected one of {[k.value for k in ScenarioKind]})",
        ) from None

    _reject_unknown(data, {"kind", "n", "tolerance", "seed", kind.value}, "")
    n = _integer(_require(data, "n", ""), "n")
    if n < 3:
        raise ScenarioValidationError("n", f"field 'n' must be at least 3, got {n}")
    tolerance = _parse_tolerance(data.get("tolerance"))
    seed = _integer(data.get("seed", 0), "seed")

    block = _require(data, kind.value, "")
    if not isinstance(block, dict):
        raise ScenarioValidationError(kind.value, f"field {kind.value!r} must be an object")
    if kind is ScenarioKind.PAIR:
        config: Config = _parse_pair(block)
    elif kind is ScenarioKind.SHARED_VERTEX:
        config = _parse_shared_vertex(block)
    elif kind is ScenarioKind.BOTTEMA:
        config = _parse_bottema(block)
    else:
        config = _parse_identity_check(block, n)
    return Scenario(kind=kind, n=n, tolerance=tolerance, seed=seed, config=config)


def _point_out(p: Point) -> list[float]:
    return [p.x, p.y]


def _config_out(scenario: Scenario) -> dict[str, Any]:
    cfg = scenario.config
    if isinstance(cfg, PairConfig):
        return {
            "centroid1": _point_out(cfg.centroid1),
            "r1": cfg.r1,
            "phase1": cfg.phase1,
            "orient1": cfg.orient1,
            "centroid2": _point_out(cfg.centroid2),
            "r2": cfg.r2,
            "phase2": cfg.phase2,
            "orient2": cfg.orient2,
        }
    if isinstance(cfg, SharedVertexConfig):
        return {
            "vertex": _point_out(cfg.vertex),
            "centroid1": _point_out(cfg.centroid1),
            "centroid2": _point_out(cfg.centroid2),
            "orient1": cfg.orient1,
            "orient2": cfg.orient2,
        }
    if isinstance(cfg, BottemaConfig):
        return {
            "an": _point_out(cfg.an),
            "a1": _point_out(cfg.a1),
            "bn": _point_out(cfg.bn),
            "side1": cfg.side1,
            "side2": cfg.side2,
            "sweep_samples": cfg.sweep_samples,
        }
    return {
        "centroid": _point_out(cfg.centroid),
        "r": cfg.r,
        "phase": cfg.phase,
        "orient": cfg.orient,
        "probes": [_point_out(p) for p in cfg.probes],
        "max_m": cfg.max_m,
    }


def serialize_scenario(scenario: Scenario) -> str:
    """Emit the canonical JSON form: sorted keys, two-space indent, newline end."""
    doc = {
        "kind": scenario.kind.value,
        "n": scenario.n,
        "seed": scenario.seed,
        "tolerance": {"rel": scenario.tolerance.rel, "abs": scenario.tolerance.abs},
        scenario.kind.value: _config_out(scenario),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
