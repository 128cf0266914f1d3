"""Command-line interface.

Verbs:

    verify <file>                 run a scenario file, print the report
    render <file> -o <svg>       render a scenario file as an SVG figure
    sweep --kind K --n RANGE     randomized property sweeps
    bottema --an x,y --bn x,y    quick apex-independence check

Exit codes: 0 on success (including a verified absence of solution points),
1 when a check fails, 2 for input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .bottema import verify_independence
from .geom import DEFAULT_TOLERANCE, GeometryError, Point, Tolerance
from .runner import run_scenario
from .sampling import random_scenario
from .scenario import ScenarioError, ScenarioKind, parse_scenario
from .svgfig import render_svg

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _parse_point(text: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    try:
        return Point(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected numeric 'x,y', got {text!r}") from exc


def _parse_n_range(text: str) -> list[int]:
    try:
        if "-" in text:
            lo_text, hi_text = text.split("-", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from exc
    if lo < 3 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 3 <= LO <= HI, got {text!r}")
    return list(range(lo, hi + 1))


def _add_tolerance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tolerance-rel", type=float, default=None, metavar="REL",
                        help="override the relative tolerance")
    parser.add_argument("--tolerance-abs", type=float, default=None, metavar="ABS",
                        help="override the absolute tolerance")


def _tolerance_override(args: argparse.Namespace, base: Tolerance) -> Tolerance | None:
    """None means: keep whatever the scenario (or default) specifies."""
    if args.tolerance_rel is None and args.tolerance_abs is None:
        return None
    rel = args.tolerance_rel if args.tolerance_rel is not None else base.rel
    abs_ = args.tolerance_abs if args.tolerance_abs is not None else base.abs
    return Tolerance(rel=rel, abs=abs_)


def _load_scenario(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None
    try:
        return parse_scenario(text)
    except ScenarioError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def _cmd_verify(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.file)
    if scenario is None:
        return EXIT_INPUT_ERROR
    try:
        tol = _tolerance_override(args, scenario.tolerance)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = run_scenario(scenario, tol)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(report.to_text())
    if report.errors:
        return EXIT_INPUT_ERROR
    return EXIT_OK if report.overall_ok else EXIT_CHECK_FAILED


def _cmd_render(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.file)
    if scenario is None:
        return EXIT_INPUT_ERROR
    try:
        tol = _tolerance_override(args, scenario.tolerance)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = run_scenario(scenario, tol)
    try:
        document = render_svg(scenario, report, tol)
    except GeometryError as exc:
        print(f"error: cannot render {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    kind = ScenarioKind(args.kind)
    try:
        tol = _tolerance_override(args, DEFAULT_TOLERANCE) or DEFAULT_TOLERANCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    rng = random.Random(args.seed)
    total = 0
    failures = 0
    for n in args.n:
        passed = 0
        worst = 0.0
        for _ in range(args.count):
            scenario = random_scenario(kind, n, rng, tol)
            report = run_scenario(scenario)
            total += 1
            if report.overall_ok:
                passed += 1
            else:
                failures += 1
            worst = max(
                worst,
                max((check.residual for check in report.checks if not check.vacuous), default=0.0),
            )
        print(f"n={n}: {passed}/{args.count} pass  worst residual {worst:.3e}")
    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"sweep {args.kind}: {verdict} ({total - failures}/{total} configurations)")
    return EXIT_OK if failures == 0 else EXIT_CHECK_FAILED


def _cmd_bottema(args: argparse.Namespace) -> int:
    try:
        tol = _tolerance_override(args, DEFAULT_TOLERANCE) or DEFAULT_TOLERANCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        report = verify_independence(args.an, args.bn, args.n, args.samples, tol, args.seed)
    except (GeometryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(f"base length: {report.base_length!r}")
    print(f"apex samples: {report.samples}")
    print(f"max midpoint deviation: {report.max_deviation:.3e}")
    print(f"max closed-form residual: {report.max_closed_form_residual:.3e}")
    print(f"allowed: {tol.bound(report.base_length):.3e}")
    print(f"result: {'PASS' if report.ok else 'FAIL'}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equigon",
        description="Construct and verify equal-distance points for pairs of regular polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a scenario file and report every check")
    verify.add_argument("file", help="scenario JSON file")
    verify.add_argument("--json", action="store_true", help="emit the report as JSON")
    _add_tolerance_flags(verify)
    verify.set_defaults(handler=_cmd_verify)

    render = sub.add_parser("render", help="render a scenario file as an SVG figure")
    render.add_argument("file", help="scenario JSON file")
    render.add_argument("-o", "--output", required=True, help="output SVG path")
    _add_tolerance_flags(render)
    render.set_defaults(handler=_cmd_render)

    sweep = sub.add_parser("sweep", help="randomized property sweeps")
    sweep.add_argument("--kind", required=True, choices=[k.value for k in ScenarioKind])
    sweep.add_argument("--n", type=_parse_n_range, default=list(range(3, 9)),
                       metavar="N|LO-HI", help="vertex counts to sweep (default 3-8)")
    sweep.add_argument("--count", type=int, default=20, help="configurations per n (default 20)")
    sweep.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    _add_tolerance_flags(sweep)
    sweep.set_defaults(handler=_cmd_sweep)

    bottema = sub.add_parser("bottema", help="quick apex-independence check on a fixed base")
    bottema.add_argument("--an", type=_parse_point, default=Point(0.0, 0.0), metavar="X,Y",
                         help="first base corner (default 0,0)")
    bottema.add_argument("--bn", type=_parse_point, default=Point(2.0, 0.0), metavar="X,Y",
                         help="second base corner (default 2,0)")
    bottema.add_argument("--n", type=int, default=4, help="vertex count (default 4)")
    bottema.add_argument("--samples", type=int, default=100, help="apex samples (default 100)")
    bottema.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    _add_tolerance_flags(bottema)
    bottema.set_defaults(handler=_cmd_bottema)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
