"""Command-line interface.

Exit codes: 0 success, 1 domain error (a JSON object with ``error`` and
``message`` is printed on stdout), 2 usage error (bad arguments or an
unreadable or invalid input file).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .diagram import Diagram, InvalidDiagram, parse_pd
from .errors import GeoKnotError, InvalidPolygon, NonGeneric, PolygonTooSmall
from .geometry import DEFAULT_EPS, check_tol
from .heptagon import permutahedron, region_code_hept, xi
from .hexagon import deltas, joint_class, region_code, region_code_hex
from .knots import identify
from .polygon import (
    dumps_polygon,
    edge_lengths,
    is_embedded,
    is_equilateral,
    is_generic,
    parse_polygon,
    perturb_generic,
)
from .projection import crossing_bound, orthogonal_bound, orthogonal_diagram, radial_diagram
from .sampling import census, certify_path
from .symmetry import apply_action

PROJECTION_RETRIES = 8


class UsageError(Exception):
    """Bad input that maps to exit code 2."""


def _read_text(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_polygon(path: str, n: int | None = None) -> np.ndarray:
    try:
        v = parse_polygon(_read_text(path))
    except (InvalidPolygon, PolygonTooSmall, json.JSONDecodeError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    if n is not None and len(v) != n:
        raise UsageError(f"{path}: expected {n} vertices, got {len(v)}")
    return v


def _prepare(v: np.ndarray, args) -> np.ndarray:
    """Apply ``--perturb`` if requested."""
    if args.perturb is None:
        return v
    return perturb_generic(v, args.perturb, args.seed, args.tol)


def _emit(obj, args, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(obj, indent=2, sort_keys=False))


def _with_retries(func, v: np.ndarray, args):
    """Run ``func(v)``, retrying on tiny generic perturbations when it reports NonGeneric."""
    try:
        return func(v), 0
    except NonGeneric as first:
        report = is_embedded(v, args.tol)
        if not report.embedded:
            raise
        magnitude = report.clearance * 1e-6
        for attempt in range(1, PROJECTION_RETRIES + 1):
            w = perturb_generic(v, magnitude, args.seed + attempt, args.tol)
            try:
                return func(w), attempt
            except NonGeneric:
                continue
        raise first


# --- subcommands -------------------------------------------------------------------

def cmd_check(args) -> int:
    v = _load_polygon(args.polygon)
    report = is_embedded(v, args.tol)
    out = report.to_dict()
    out["n"] = len(v)
    out["edge_lengths"] = [float(x) for x in edge_lengths(v)]
    out["equilateral"] = is_equilateral(v, 1.0, args.tol)
    out["generic"] = is_generic(v, args.tol)
    _emit(out, args, report.status.value)
    return 0


def cmd_classify_hex(args) -> int:
    v = _prepare(_load_polygon(args.polygon, 6), args)
    jc = joint_class(v, args.tol)
    out = jc.to_dict()
    out["deltas"] = list(deltas(v, args.tol))
    try:
        out["region"] = str(region_code_hex(v, args.tol))
    except NonGeneric:
        out["region"] = None
    _emit(out, args, f"{jc.knot} chirality={jc.chirality} curl={jc.curlpart}")
    return 0


def cmd_classify_hept(args) -> int:
    v = _prepare(_load_polygon(args.polygon, 7), args)
    report = xi(v, args.tol)
    out = report.to_dict()
    (ident, _), _ = _with_retries(lambda w: (identify(radial_diagram(w, args.tol)), None), v, args)
    out["type"] = ident.name
    try:
        out["region"] = str(region_code_hept(v, args.tol))
    except NonGeneric:
        out["region"] = None
    _emit(out, args, f"type={ident.name} xi={report.xi}")
    return 0


def cmd_region(args) -> int:
    v = _prepare(_load_polygon(args.polygon), args)
    if args.hexagon or args.heptagon:
        n = 6 if args.hexagon else 7
        if len(v) != n:
            raise UsageError(f"expected {n} vertices, got {len(v)}")
        code = (region_code_hex if n == 6 else region_code_hept)(v, args.tol)
    else:
        code = region_code(v, args.tol)
    _emit({"region": str(code)}, args, str(code))
    return 0


def cmd_act(args) -> int:
    v = _load_polygon(args.polygon)
    try:
        w = apply_action(v, args.op)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = dumps_polygon(w)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _project(v: np.ndarray, args) -> Diagram:
    method = radial_diagram if args.method == "radial" else orthogonal_diagram
    return method(v, args.tol)


def cmd_project(args) -> int:
    v = _load_polygon(args.polygon)
    diagram, retries = _with_retries(lambda w: _project(w, args), v, args)
    out = diagram.to_dict()
    out["method"] = args.method
    out["gauss"] = diagram.gauss_string()
    out["pd"] = diagram.pd_string()
    bound = crossing_bound if args.method == "radial" else orthogonal_bound
    out["bound"] = bound(len(v))
    out["perturbation_retries"] = retries
    _emit(out, args, f"{out['gauss']}\n{out['pd']}")
    return 0


def cmd_identify(args) -> int:
    text = _read_text(args.input)
    retries = 0
    if "X[" in text or "X(" in text or args.pd:
        try:
            diagram = Diagram.from_pd(parse_pd(text))
        except (InvalidDiagram, ValueError) as exc:
            raise UsageError(f"{args.input}: {exc}") from None
        source = "pd"
    else:
        try:
            v = parse_polygon(text)
        except (InvalidPolygon, PolygonTooSmall, json.JSONDecodeError) as exc:
            raise UsageError(f"{args.input}: {exc}") from None
        diagram, retries = _with_retries(lambda w: _project(w, args), v, args)
        source = "polygon"
    result = identify(diagram, args.max_crossings)
    out = result.to_dict()
    out["source"] = source
    out["writhe"] = diagram.writhe
    out["perturbation_retries"] = retries
    _emit(out, args, out["display"])
    return 0


def cmd_census(args) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    if args.samples < 0:
        raise UsageError("--samples must be non-negative")
    report = census(args.n, args.samples, args.seed, args.equilateral, args.tol, args.workers)
    out = report.to_dict()
    if args.out:
        Path(args.out).write_text(json.dumps(out, indent=2) + "\n")
    _emit(out, args, "\n".join(f"{k}\t{c}" for k, c in sorted(report.histogram.items())))
    return 0


def cmd_path_check(args) -> int:
    try:
        data = json.loads(_read_text(args.path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.path}: {exc}") from None
    frames = data.get("frames") if isinstance(data, dict) else data
    if not isinstance(frames, list) or not frames:
        raise UsageError("expected a non-empty JSON array of polygons")
    frames = [f["vertices"] if isinstance(f, dict) else f for f in frames]
    try:
        arrays = [np.array(f, dtype=float) for f in frames]
        result = certify_path(arrays, args.tol)
    except (ValueError, InvalidPolygon, PolygonTooSmall) as exc:
        raise UsageError(str(exc)) from None
    _emit(result.to_dict(), args, "certified" if result.certified else f"uncertified: {result.reason}")
    return 0


def cmd_permutahedron(args) -> int:
    graph = permutahedron()
    if args.format == "json":
        print(json.dumps(graph.to_dict(), indent=2))
    else:
        sys.stdout.write(graph.to_dot())
    return 0


# --- parser ------------------------------------------------------------------------

def _positive_tol(text: str) -> float:
    try:
        return check_tol(float(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _magnitude(text: str) -> float:
    value = float(text)
    if not 0 <= value < 1:
        raise argparse.ArgumentTypeError("perturbation magnitude must lie in [0, 1)")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_positive_tol, default=DEFAULT_EPS,
                        help="relative tolerance of the sign predicates (default 1e-9)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--perturb", type=_magnitude, metavar="MAG",
                        help="perturb the polygon generically by at most MAG first")

    parser = argparse.ArgumentParser(prog="geoknot", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "embeddedness report").add_argument("polygon")
    add("classify-hex", cmd_classify_hex, "joint chirality-curl of a hexagon").add_argument("polygon")
    add("classify-hept", cmd_classify_hept, "Xi report of a heptagon").add_argument("polygon")

    p = add("region", cmd_region, "region code (of the polygon as given, or of g(H))")
    p.add_argument("polygon")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--hexagon", action="store_true", help="input is a hexagon H; report the code of g(H)")
    g.add_argument("--heptagon", action="store_true", help="input is a heptagon H; report the code of g(H)")

    p = add("act", cmd_act, "apply reverse, rotate:k or mirror")
    p.add_argument("polygon")
    p.add_argument("--op", required=True, help="reverse | rotate:k | mirror, comma-separated")
    p.add_argument("-o", "--out")

    p = add("project", cmd_project, "knot diagram with Gauss and PD codes")
    p.add_argument("polygon")
    p.add_argument("--method", choices=("radial", "orthogonal"), default="radial")

    p = add("identify", cmd_identify, "knot type of a polygon or PD code")
    p.add_argument("input")
    p.add_argument("--pd", action="store_true", help="treat the input as a PD code")
    p.add_argument("--method", choices=("radial", "orthogonal"), default="radial")
    p.add_argument("--max-crossings", type=int, default=None)

    p = add("census", cmd_census, "sample polygons and tally invariants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--equilateral", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--out")

    add("path-check", cmd_path_check, "certify a discrete isotopy path").add_argument("path")

    p = sub.add_parser("permutahedron", help="graph of heptagonal region codes")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_permutahedron)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"geoknot {args.command}: {exc}", file=sys.stderr)
        return 2
    except GeoKnotError as exc:
        print(json.dumps(exc.to_dict()))
        return 1
    except ValueError as exc:
        print(json.dumps({"error": "InvalidInput", "message": str(exc)}))
        return 1


def run() -> None:
    sys.exit(main())
