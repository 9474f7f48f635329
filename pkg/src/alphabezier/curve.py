"""Bezier curves over the homography-indexed rational Bernstein basis.

A curve is a control polygon paired with a basis spec.  Evaluation,
deCasteljau tableaux, degree elevation, subdivision, endpoint tangents,
curvature and affine maps all follow the classical algorithms with the
basis weight w(x) supplied by the homography.  Subdividing at c yields two
curves of the same degree whose polygons are the first column and the
anti-diagonal of one tableau; both children are parametrized over the full
original interval through the split reparametrizations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisSpec
from .errors import ArgumentError, DomainError, SingularPointError
from .homography import HomographyMap

#: Recursive subdivision is capped here; the polygon count doubles per level.
MAX_SUBDIVISION_DEPTH = 20


@dataclass(frozen=True)
class ControlPolygon:
    """Ordered control points in R^d, d in {1, 2, 3}, as an (n+1, d) array."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts[:, None]
        if pts.ndim != 2:
            raise ArgumentError("control points must form a 2-D array")
        if pts.shape[0] < 2:
            raise ArgumentError("a control polygon needs at least 2 points")
        if pts.shape[1] not in (1, 2, 3):
            raise ArgumentError(f"unsupported point dimension {pts.shape[1]}")
        if not np.all(np.isfinite(pts)):
            raise ArgumentError("control points must be finite")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]

    def __getitem__(self, i):
        return self.points[i]

    @property
    def degree(self) -> int:
        return len(self) - 1

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def diameter(self) -> float:
        """Largest pairwise distance between control points."""
        diff = self.points[:, None, :] - self.points[None, :, :]
        return float(np.sqrt((diff**2).sum(-1).max()))


@dataclass(frozen=True)
class DeCasteljauTableau:
    """Triangular array of repeated w-weighted interpolations at one parameter."""

    levels: tuple

    @property
    def apex(self) -> np.ndarray:
        """The single point on the last level: the curve point itself."""
        return self.levels[-1][0]

    def left_points(self) -> np.ndarray:
        """First point of every level; the left child polygon of a subdivision."""
        return np.array([lvl[0] for lvl in self.levels])

    def right_points(self) -> np.ndarray:
        """Anti-diagonal of the tableau; the right child polygon of a subdivision."""
        n = len(self.levels) - 1
        return np.array([self.levels[n - i][i] for i in range(n + 1)])


@dataclass(frozen=True)
class EndpointTangents:
    """Curve derivatives at the interval ends, plus degenerate-leg flags.

    The vectors are positive multiples of the first and last polygon legs;
    when a leg has zero length the vector is zero and the flag is set,
    since the direction is undefined there.
    """

    start: np.ndarray
    end: np.ndarray
    start_degenerate: bool
    end_degenerate: bool


@dataclass(frozen=True)
class SubdivisionResult:
    """Two same-degree curves covering the two sides of a split."""

    left: "BezierCurve"
    right: "BezierCurve"
    split: float


@dataclass(frozen=True)
class BezierCurve:
    """A control polygon evaluated through one basis spec."""

    polygon: ControlPolygon
    spec: BasisSpec

    def __post_init__(self):
        polygon = self.polygon
        if not isinstance(polygon, ControlPolygon):
            polygon = ControlPolygon(polygon)
            object.__setattr__(self, "polygon", polygon)
        if len(polygon) != self.spec.degree + 1:
            raise ArgumentError(
                f"polygon has {len(polygon)} points but degree {self.spec.degree} needs "
                f"{self.spec.degree + 1}"
            )

    @property
    def homography(self) -> HomographyMap:
        return self.spec.homography

    @property
    def a(self) -> float:
        return self.spec.a

    @property
    def b(self) -> float:
        return self.spec.b

    def point(self, x: float) -> np.ndarray:
        """Curve point at x by summing the basis against the polygon."""
        return self.spec.values(x) @ self.polygon.points

    def samples(self, xs) -> np.ndarray:
        """Curve points at each parameter in xs, stacked row-wise."""
        return np.array([self.point(x) for x in np.asarray(xs, dtype=float)])

    def derivative(self, x: float, order: int = 1) -> np.ndarray:
        """First or second derivative vector at x."""
        return self.spec.derivatives(x, order) @ self.polygon.points

    def tableau(self, x: float) -> DeCasteljauTableau:
        """All interpolation levels at x; level 0 is the control polygon."""
        w = self.homography.value(x)
        levels = [self.polygon.points]
        cur = self.polygon.points
        for _ in range(self.spec.degree):
            cur = w * cur[1:] + (1.0 - w) * cur[:-1]
            levels.append(cur)
        return DeCasteljauTableau(tuple(levels))

    def decasteljau(self, x: float) -> tuple[np.ndarray, DeCasteljauTableau]:
        """Curve point at x via repeated interpolation, plus the full tableau."""
        tab = self.tableau(x)
        return tab.apex, tab

    def elevated(self) -> "BezierCurve":
        """The same curve written one degree higher.

        The new interior points average consecutive originals with weights
        i/(n+1) and 1 - i/(n+1); the end points are kept bit-exactly.
        """
        pts = self.polygon.points
        n = self.spec.degree
        out = np.empty((n + 2, pts.shape[1]))
        out[0] = pts[0]
        out[n + 1] = pts[n]
        for i in range(1, n + 1):
            t = i / (n + 1.0)
            out[i] = t * pts[i - 1] + (1.0 - t) * pts[i]
        return BezierCurve(ControlPolygon(out), self.spec.raised())

    def subdivide(self, c: float) -> SubdivisionResult:
        """Split at an interior parameter c into two same-degree curves.

        Both children live on the original interval: the left child traces
        the arc up to the split point, the right child the rest, and they
        share the curve point at c as a common polygon vertex.
        """
        if not self.a < c < self.b:
            raise DomainError(f"split parameter {c} must lie strictly inside "
                              f"({self.a}, {self.b})")
        tab = self.tableau(c)
        left = BezierCurve(ControlPolygon(tab.left_points()), self.spec)
        right = BezierCurve(ControlPolygon(tab.right_points()), self.spec)
        return SubdivisionResult(left, right, float(c))

    def subdivide_recursive(self, depth: int) -> list[ControlPolygon]:
        """Polygons of the 2**depth curves from repeated midpoint splits, in curve order."""
        if not isinstance(depth, int) or isinstance(depth, bool) or depth < 0:
            raise ArgumentError(f"depth must be a nonnegative integer, got {depth!r}")
        if depth > MAX_SUBDIVISION_DEPTH:
            raise ArgumentError(f"depth {depth} above maximum {MAX_SUBDIVISION_DEPTH}")
        if depth == 0:
            return [self.polygon]
        parts = self.subdivide(0.5 * (self.a + self.b))
        return (parts.left.subdivide_recursive(depth - 1)
                + parts.right.subdivide_recursive(depth - 1))

    def endpoint_tangents(self) -> EndpointTangents:
        """Derivative vectors at a and b; positive multiples of the end legs."""
        pts = self.polygon.points
        n = self.spec.degree
        h = self.homography
        if h.is_classical:
            sa = sb = n / h.width
        else:
            sa = n * h.alpha / ((h.alpha - 1.0) * h.width)
            sb = n * (h.alpha - 1.0) / (h.alpha * h.width)
        first = pts[1] - pts[0]
        last = pts[n] - pts[n - 1]
        return EndpointTangents(
            start=sa * first,
            end=sb * last,
            start_degenerate=not np.any(first),
            end_degenerate=not np.any(last),
        )

    def curvature(self, x: float) -> float:
        """Curvature |B' x B''| / |B'|**3 at a regular point; 2-D or 3-D curves only."""
        if self.polygon.dim not in (2, 3):
            raise ArgumentError("curvature needs 2-D or 3-D control points")
        v1 = self.derivative(x, 1)
        v2 = self.derivative(x, 2)
        if self.polygon.dim == 2:
            v1 = np.append(v1, 0.0)
            v2 = np.append(v2, 0.0)
        speed = float(np.linalg.norm(v1))
        if speed <= 1e-12:
            raise SingularPointError(f"first derivative vanishes at x={x!r}")
        return float(np.linalg.norm(np.cross(v1, v2)) / speed**3)

    def transformed(self, matrix, offset=None) -> "BezierCurve":
        """The curve under x -> M x + C, applied to the control points.

        Affine invariance makes this identical to transforming every curve
        point directly.
        """
        m = np.asarray(matrix, dtype=float)
        pts = self.polygon.points @ m.T
        if offset is not None:
            pts = pts + np.asarray(offset, dtype=float)
        return BezierCurve(ControlPolygon(pts), self.spec)


def make_curve(points, alpha: float, a: float = 0.0, b: float = 1.0) -> BezierCurve:
    """Convenience constructor: polygon plus index plus interval."""
    polygon = points if isinstance(points, ControlPolygon) else ControlPolygon(points)
    spec = BasisSpec(polygon.degree, HomographyMap(a, b, alpha))
    return BezierCurve(polygon, spec)


def reindexed(curve: BezierCurve, alpha: float, interval=None) -> BezierCurve:
    """Same polygon, different index and (optionally) different interval.

    The resulting curve traces the same point set: each parameter x of the
    original corresponds to y with equal reparametrization value.
    """
    a, b = interval if interval is not None else (curve.a, curve.b)
    spec = BasisSpec(curve.spec.degree, HomographyMap(a, b, alpha))
    return BezierCurve(curve.polygon, spec)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Sampled agreement between two curves sharing one control polygon."""

    max_deviation: float
    parameters: np.ndarray
    mapped_parameters: np.ndarray


def index_invariance(curve: BezierCurve, other: BezierCurve,
                     samples: int = 200) -> CorrespondenceReport:
    """Measure how far two same-polygon curves drift apart under the
    parameter correspondence y = g_inverse(f(x)).

    For curves built from the same polygon the deviation is roundoff only,
    which is the index-independence of the traced point set.
    """
    if len(curve.polygon) != len(other.polygon):
        raise ArgumentError("curves must share control polygons of equal length")
    f = curve.homography
    g = other.homography
    xs = np.linspace(curve.a, curve.b, samples)
    ys = np.array([g.inverse(f.value(x)) for x in xs])
    dev = 0.0
    for x, y in zip(xs, ys):
        dev = max(dev, float(np.linalg.norm(curve.point(x) - other.point(y))))
    return CorrespondenceReport(dev, xs, ys)


def densify_polyline(points, per_edge: int = 8) -> np.ndarray:
    """Points along a polyline, per_edge per segment plus the final vertex."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if per_edge < 1:
        raise ArgumentError("per_edge must be at least 1")
    ts = np.arange(per_edge) / per_edge
    rows = [(1.0 - t) * pts[i] + t * pts[i + 1]
            for i in range(len(pts) - 1) for t in ts]
    rows.append(pts[-1])
    return np.array(rows)


def _min_dist_to_polyline(points: np.ndarray, vertices: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest segment of a vertex chain."""
    if len(vertices) == 1:
        return np.sqrt(((points - vertices[0]) ** 2).sum(-1))
    v0 = vertices[:-1]
    dv = vertices[1:] - v0
    len2 = (dv**2).sum(-1)
    len2 = np.where(len2 == 0.0, 1.0, len2)  # duplicate vertices act as points
    out = np.empty(len(points))
    for start in range(0, len(points), 128):
        chunk = points[start : start + 128]
        diff = chunk[:, None, :] - v0[None, :, :]
        t = np.clip((diff * dv[None]).sum(-1) / len2[None], 0.0, 1.0)
        proj = v0[None] + t[..., None] * dv[None]
        d2 = ((chunk[:, None, :] - proj) ** 2).sum(-1)
        out[start : start + 128] = np.sqrt(d2.min(axis=1))
    return out


def hausdorff_distance(path_a, path_b) -> float:
    """Approximate Hausdorff distance between two polylines.

    One-sided vertex-to-segment distances, taken both ways; deviations
    peaking strictly between the vertices of the source path are not
    probed, so sample densely.
    """
    a = np.atleast_2d(np.asarray(path_a, dtype=float))
    b = np.atleast_2d(np.asarray(path_b, dtype=float))
    return float(max(_min_dist_to_polyline(a, b).max(),
                     _min_dist_to_polyline(b, a).max()))
