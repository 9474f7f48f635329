"""Command line surface.

One executable with a --command switch: dump basis tables, sample curves,
subdivide, elevate, run demo fits, or run a seeded self test.  Output goes
to CSV, JSON or SVG files; identical configurations produce byte-identical
files.  Exit codes: 0 success, 2 validation failure, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import svg
from .approx import fit_collocation, fit_least_squares
from .basis import BasisSpec
from .curve import BezierCurve, ControlPolygon, make_curve
from .errors import ArgumentError, DomainError, ValidationError
from .homography import INFINITY, HomographyMap
from .presets import PRESET_POLYGONS, preset_polygon

COMMANDS = ("basis", "curve", "subdivide", "elevate", "fit", "selftest")
FORMATS = ("csv", "json", "svg")
DEFAULT_PANEL_ALPHAS = (-1.0, 2.0, 5.0, INFINITY)
SEED_ENV_VAR = "ALPHABEZIER_SEED"

FIT_TARGETS = {
    "rational1": lambda t: t / (1.0 + t * t),
    "rational2": lambda t: (1.0 - t * t) / (1.0 + t * t),
    "sine": lambda t: math.sin(math.pi * t),
    "constant": lambda t: 1.0,
}


@dataclass
class JobConfig:
    """A fully validated CLI job, ready to run."""

    command: str
    degree: int
    alphas: tuple[float, ...]
    interval: tuple[float, float]
    polygon: ControlPolygon | None
    polygon_label: str | None
    samples: int
    depth: int
    fmt: str
    out: Path | None
    target: str
    seed: int


def _parse_alpha_token(token: str) -> float:
    if token.strip().lower() == "inf":
        return INFINITY
    try:
        return float(token)
    except ValueError:
        raise ValidationError("alpha", f"cannot parse {token!r}") from None


def _parse_interval(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError("interval", f"expected 'a,b', got {text!r}")
    try:
        a, b = float(parts[0]), float(parts[1])
    except ValueError:
        raise ValidationError("interval", f"cannot parse {text!r}") from None
    if not a < b:
        raise ValidationError("interval", f"need a < b, got {text!r}")
    return a, b


def _load_polygon(token: str) -> tuple[ControlPolygon, str]:
    if token in PRESET_POLYGONS:
        return preset_polygon(token), f"preset:{token}"
    path = Path(token)
    if not path.exists():
        raise ValidationError("polygon", f"{token!r} is neither a preset nor a file")
    try:
        text = path.read_text()
        if text.lstrip().startswith("["):
            rows = json.loads(text)
        else:
            rows = [
                [float(part) for part in line.replace(",", " ").split()]
                for line in text.splitlines()
                if line.strip() and not line.lstrip().startswith("#")
            ]
        return ControlPolygon(np.array(rows, dtype=float)), f"file:{token}"
    except (ValueError, ArgumentError, json.JSONDecodeError) as exc:
        raise ValidationError("polygon", f"cannot read control points: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphabezier",
        description="Rational Bernstein bases and Bezier curve tools.",
    )
    parser.add_argument("--command", required=True, choices=COMMANDS)
    parser.add_argument("--degree", type=int, default=None,
                        help="basis/fit degree; curve commands take it from the polygon")
    parser.add_argument("--alpha", default=None,
                        help="index value, 'inf', or a comma list for basis panels")
    parser.add_argument("--interval", default="0,1", help="parameter interval 'a,b'")
    parser.add_argument("--polygon", default=None,
                        help="preset name (a..i) or a file of control points")
    parser.add_argument("--samples", type=int, default=512)
    parser.add_argument("--depth", type=int, default=4,
                        help="subdivision recursion depth (max 20)")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default=None)
    parser.add_argument("--out", default=None, help="output file path")
    parser.add_argument("--target", default="rational1", choices=sorted(FIT_TARGETS),
                        help="named scalar function for the fit command")
    return parser


def parse_config(argv=None) -> JobConfig:
    ns = build_parser().parse_args(argv)
    command = ns.command
    interval = _parse_interval(ns.interval)

    if ns.alpha is None:
        alphas = DEFAULT_PANEL_ALPHAS if command == "basis" else (2.0,)
    else:
        alphas = tuple(_parse_alpha_token(tok) for tok in ns.alpha.split(","))
    if not alphas:
        raise ValidationError("alpha", "at least one index value is required")
    if command != "basis" and len(alphas) != 1:
        raise ValidationError("alpha", f"{command} takes a single index value")

    polygon = None
    polygon_label = None
    if ns.polygon is not None:
        polygon, polygon_label = _load_polygon(ns.polygon)

    needs_polygon = command in ("curve", "subdivide", "elevate")
    if needs_polygon and polygon is None:
        raise ValidationError("polygon", f"{command} requires --polygon")

    if needs_polygon:
        degree = polygon.degree
        if ns.degree is not None and ns.degree != degree:
            raise ValidationError(
                "degree", f"--degree {ns.degree} conflicts with polygon of degree {degree}")
    elif ns.degree is not None:
        degree = ns.degree
    else:
        degree = 8 if command == "fit" else 3
    if degree < 1:
        raise ValidationError("degree", "degree must be at least 1")

    if ns.samples < 2:
        raise ValidationError("samples", "need at least 2 samples")
    if not 0 <= ns.depth <= 20:
        raise ValidationError("depth", f"depth must be in 0..20, got {ns.depth}")

    fmt = ns.fmt
    if fmt is None:
        fmt = "json" if command in ("fit", "selftest") else "svg"

    out = Path(ns.out) if ns.out is not None else None
    if out is None and command != "selftest":
        raise ValidationError("out", f"{command} requires --out")

    for alpha in alphas:
        try:
            HomographyMap(interval[0], interval[1], alpha)
        except ArgumentError as exc:
            raise ValidationError("alpha", str(exc)) from None

    seed = int(os.environ.get(SEED_ENV_VAR, "0"))
    return JobConfig(command, degree, alphas, interval, polygon, polygon_label,
                     ns.samples, ns.depth, fmt, out, ns.target, seed)


# ---------------------------------------------------------------- output


def _alpha_json(alpha: float):
    return "inf" if math.isinf(alpha) else alpha


def _alpha_text(alpha: float) -> str:
    return "inf" if math.isinf(alpha) else repr(alpha)


def _write_text(out: Path | None, text: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell if isinstance(cell, str) else repr(float(cell))
                              for cell in row))
    return "\n".join(lines) + "\n"


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _polygon_lists(points: np.ndarray) -> list:
    return [[float(v) for v in row] for row in np.atleast_2d(points)]


def _planar(points: np.ndarray) -> np.ndarray:
    """Project samples or polygons to 2-D for plotting."""
    pts = np.atleast_2d(points)
    if pts.shape[1] == 1:
        # 1-D curves plot as a graph over an index axis
        return np.column_stack([np.arange(len(pts), dtype=float), pts[:, 0]])
    return pts[:, :2]


# ---------------------------------------------------------------- commands


def _basis_panel(spec: BasisSpec, xs: np.ndarray, title: str,
                 width: float, height: float) -> list[str]:
    to_px = svg.transformer((spec.a, spec.b, 0.0, 1.0), width, height)
    elements = [svg.rect(0.0, 0.0, width, height)]
    table = np.array([spec.values(x) for x in xs])
    for i in range(spec.degree + 1):
        pixels = [to_px(x, table[j, i]) for j, x in enumerate(xs)]
        elements.append(svg.polyline(pixels, svg.PALETTE[i % len(svg.PALETTE)]))
    elements.append(svg.text(8.0, 16.0, title))
    return elements


def cmd_basis(config: JobConfig) -> None:
    a, b = config.interval
    xs = np.linspace(a, b, config.samples)
    specs = [BasisSpec(config.degree, HomographyMap(a, b, alpha)) for alpha in config.alphas]

    if config.fmt == "svg":
        panel_w, panel_h, gap = 420.0, 320.0, 10.0
        cols = 2 if len(specs) > 1 else 1
        rows = (len(specs) + cols - 1) // cols
        parts = []
        for k, spec in enumerate(specs):
            title = f"alpha = {_alpha_text(spec.homography.alpha)}"
            panel = _basis_panel(spec, xs, title, panel_w, panel_h)
            tx = (k % cols) * (panel_w + gap)
            ty = (k // cols) * (panel_h + gap)
            parts.append(svg.group(panel, tx, ty))
        doc = svg.document(cols * panel_w + (cols - 1) * gap,
                           rows * panel_h + (rows - 1) * gap, parts)
        _write_text(config.out, doc)
        return

    if config.fmt == "csv":
        # single-index tables use the plain x,B0..Bn schema; panel lists
        # gain a leading alpha column
        names = [f"B{i}" for i in range(config.degree + 1)]
        rows = []
        if len(specs) == 1:
            header = ["x"] + names
            for x in xs:
                rows.append([x, *specs[0].values(x)])
        else:
            header = ["alpha", "x"] + names
            for spec in specs:
                token = _alpha_text(spec.homography.alpha)
                for x in xs:
                    rows.append([token, x, *spec.values(x)])
        _write_text(config.out, _csv_text(header, rows))
        return

    samples = []
    for spec in specs:
        for x in xs:
            samples.append({
                "alpha": _alpha_json(spec.homography.alpha),
                "x": float(x),
                "values": [float(v) for v in spec.values(x)],
            })
    payload = {
        "params": _params_dict(config),
        "samples": samples,
        "polygons": [],
    }
    _write_text(config.out, _json_text(payload))


def _params_dict(config: JobConfig) -> dict:
    params = {
        "command": config.command,
        "degree": config.degree,
        "alpha": [_alpha_json(al) for al in config.alphas],
        "interval": [config.interval[0], config.interval[1]],
        "samples": config.samples,
        "format": config.fmt,
    }
    if config.command == "subdivide":
        params["depth"] = config.depth
    if config.polygon_label is not None:
        params["polygon"] = config.polygon_label
    if config.command == "fit":
        params["target"] = config.target
    return params


def _curve_figure(curve: BezierCurve, xs: np.ndarray, polygons: list[np.ndarray],
                  dashed_first: bool = True) -> str:
    width, height = 640.0, 480.0
    pts = curve.samples(xs)
    planar_sets = [_planar(p) for p in polygons] + [_planar(pts)]
    to_px = svg.transformer(svg.data_bbox(planar_sets), width, height)
    elements = [svg.rect(0.0, 0.0, width, height)]
    for k, poly in enumerate(polygons):
        planar = _planar(poly)
        pixels = [to_px(x, y) for x, y in planar]
        color = "#999999" if (dashed_first and k == 0) else svg.PALETTE[k % len(svg.PALETTE)]
        dash = "6,4" if (dashed_first and k == 0) else None
        elements.append(svg.polyline(pixels, color, 1.0, dash))
        for x, y in pixels:
            elements.append(svg.circle(x, y, 2.5, color))
    curve_pixels = [to_px(x, y) for x, y in _planar(pts)]
    elements.append(svg.polyline(curve_pixels, "#1f77b4", 2.0))
    return svg.document(width, height, elements)


def _curve_samples_json(curve: BezierCurve, xs: np.ndarray) -> list[dict]:
    return [{"x": float(x), "values": [float(v) for v in curve.point(x)]} for x in xs]


def _curve_csv_rows(curve: BezierCurve, xs: np.ndarray) -> list[list]:
    return [[x, *curve.point(x)] for x in xs]


def _point_header(dim: int) -> list[str]:
    return [f"p{i}" for i in range(dim)]


def cmd_curve(config: JobConfig) -> None:
    a, b = config.interval
    curve = make_curve(config.polygon, config.alphas[0], a, b)
    xs = np.linspace(a, b, config.samples)
    if config.fmt == "svg":
        _write_text(config.out, _curve_figure(curve, xs, [curve.polygon.points]))
        return
    if config.fmt == "csv":
        header = ["x"] + _point_header(curve.polygon.dim)
        _write_text(config.out, _csv_text(header, _curve_csv_rows(curve, xs)))
        return
    payload = {
        "params": _params_dict(config),
        "samples": _curve_samples_json(curve, xs),
        "polygons": [_polygon_lists(curve.polygon.points)],
    }
    _write_text(config.out, _json_text(payload))


def cmd_subdivide(config: JobConfig) -> None:
    a, b = config.interval
    curve = make_curve(config.polygon, config.alphas[0], a, b)
    pieces = curve.subdivide_recursive(config.depth)
    xs = np.linspace(a, b, config.samples)
    if config.fmt == "svg":
        polys = [piece.points for piece in pieces]
        _write_text(config.out, _curve_figure(curve, xs, polys, dashed_first=False))
        return
    if config.fmt == "csv":
        header = ["polygon", "point"] + _point_header(curve.polygon.dim)
        rows = []
        for k, piece in enumerate(pieces):
            for j, pt in enumerate(piece.points):
                rows.append([repr(k), repr(j), *pt])
        _write_text(config.out, _csv_text(header, rows))
        return
    payload = {
        "params": _params_dict(config),
        "samples": _curve_samples_json(curve, xs),
        "polygons": [_polygon_lists(piece.points) for piece in pieces],
    }
    _write_text(config.out, _json_text(payload))


def cmd_elevate(config: JobConfig) -> None:
    a, b = config.interval
    curve = make_curve(config.polygon, config.alphas[0], a, b)
    lifted = curve.elevated()
    xs = np.linspace(a, b, config.samples)
    if config.fmt == "svg":
        polys = [curve.polygon.points, lifted.polygon.points]
        _write_text(config.out, _curve_figure(curve, xs, polys))
        return
    if config.fmt == "csv":
        header = ["polygon", "point"] + _point_header(curve.polygon.dim)
        rows = []
        for k, poly in enumerate((curve.polygon, lifted.polygon)):
            for j, pt in enumerate(poly.points):
                rows.append([repr(k), repr(j), *pt])
        _write_text(config.out, _csv_text(header, rows))
        return
    payload = {
        "params": _params_dict(config),
        "samples": _curve_samples_json(curve, xs),
        "polygons": [_polygon_lists(curve.polygon.points),
                     _polygon_lists(lifted.polygon.points)],
    }
    _write_text(config.out, _json_text(payload))


def cmd_fit(config: JobConfig) -> None:
    a, b = config.interval
    f = FIT_TARGETS[config.target]
    spec = BasisSpec(config.degree, HomographyMap(a, b, config.alphas[0]))
    colloc = fit_collocation(f, spec)
    lsq = fit_least_squares(f, spec, max(config.samples, config.degree + 1))
    xs = np.linspace(a, b, config.samples)
    table = [(float(x), f(x),
              float(spec.values(x) @ colloc.coefficients),
              float(spec.values(x) @ lsq.coefficients)) for x in xs]
    if config.fmt == "svg":
        width, height = 640.0, 480.0
        arr = np.array(table)
        bbox = svg.data_bbox([np.column_stack([arr[:, 0], arr[:, k]]) for k in (1, 2, 3)])
        to_px = svg.transformer(bbox, width, height)
        elements = [svg.rect(0.0, 0.0, width, height)]
        for k, color in ((1, "#999999"), (2, "#1f77b4"), (3, "#d62728")):
            elements.append(svg.polyline([to_px(x, y) for x, y in arr[:, [0, k]]], color))
        elements.append(svg.text(8.0, 16.0, f"target = {config.target}"))
        _write_text(config.out, svg.document(width, height, elements))
        return
    if config.fmt == "csv":
        header = ["x", "target", "collocation", "least_squares"]
        _write_text(config.out, _csv_text(header, [list(row) for row in table]))
        return
    payload = {
        "params": _params_dict(config),
        "samples": [{"x": row[0], "values": list(row[1:])} for row in table],
        "polygons": [[[float(c)] for c in colloc.coefficients],
                     [[float(c)] for c in lsq.coefficients]],
        "results": {
            "collocation": {"max_error": colloc.max_error, "l2_error": colloc.l2_error},
            "least_squares": {"max_error": lsq.max_error, "l2_error": lsq.l2_error},
        },
    }
    _write_text(config.out, _json_text(payload))


def _random_spec(rng: np.random.Generator) -> BasisSpec:
    a = rng.uniform(-5.0, 5.0)
    b = a + rng.uniform(0.5, 10.0)
    kind = rng.integers(0, 3)
    if kind == 0:
        alpha = rng.uniform(-6.0, -1.0)
    elif kind == 1:
        alpha = rng.uniform(2.0, 7.0)
    else:
        alpha = INFINITY
    degree = int(rng.integers(1, 9))
    return BasisSpec(degree, HomographyMap(a, b, alpha))


def cmd_selftest(config: JobConfig) -> None:
    rng = np.random.default_rng(config.seed)
    checks = []

    worst = 0.0
    for _ in range(200):
        spec = _random_spec(rng)
        x = rng.uniform(spec.a, spec.b)
        worst = max(worst, abs(spec.values(x).sum() - 1.0))
    checks.append(("partition_of_unity", worst, 1e-12))

    worst = 0.0
    for _ in range(200):
        spec = _random_spec(rng)
        x = rng.uniform(spec.a, spec.b)
        worst = max(worst, float(np.abs(spec.values(x) - spec.values_recursive(x)).max()))
    checks.append(("recursion_matches_closed_form", worst, 1e-13))

    worst = 0.0
    for _ in range(100):
        spec = _random_spec(rng)
        pts = rng.uniform(-5.0, 5.0, size=(spec.degree + 1, 2))
        curve = BezierCurve(ControlPolygon(pts), spec)
        x = rng.uniform(spec.a, spec.b)
        apex, _ = curve.decasteljau(x)
        dev = float(np.linalg.norm(apex - curve.point(x)))
        worst = max(worst, dev / curve.polygon.diameter())
    checks.append(("decasteljau_matches_direct", worst, 1e-12))

    worst = 0.0
    for _ in range(200):
        spec = _random_spec(rng)
        h = spec.homography
        x = rng.uniform(h.a, h.b)
        worst = max(worst, abs(h.inverse(h.value(x)) - x) / h.width)
    checks.append(("inverse_round_trip", worst, 1e-12))

    report = {
        "seed": config.seed,
        "checks": [
            {"name": name, "max_residual": residual, "tolerance": tol,
             "pass": bool(residual <= tol)}
            for name, residual, tol in checks
        ],
    }
    report["pass"] = all(entry["pass"] for entry in report["checks"])
    _write_text(config.out, _json_text(report))
    if not report["pass"]:
        raise RuntimeError("self test failed; see report")


DISPATCH = {
    "basis": cmd_basis,
    "curve": cmd_curve,
    "subdivide": cmd_subdivide,
    "elevate": cmd_elevate,
    "fit": cmd_fit,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
        DISPATCH[config.command](config)
    except (ValidationError, ArgumentError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # I/O trouble or a genuine bug
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
