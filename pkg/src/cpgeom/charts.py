"""Flat maps of the spherical (hyper)octant and torus-shape descriptors.

Two charts are provided.  The gnomonic chart projects from the sphere center
onto the plane touching the octant center; great circles appear as straight
lines and the corner images form a regular simplex with unit side.  The
stereographic chart projects from the antipode of a chosen corner.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DegeneratePair, DimensionMismatch, OutsideChart
from .states import EPS_EDGE, MetricMatrix, TWO_PI, fs_metric_bilinear


class ChartKind(enum.Enum):
    GNOMONIC = "gnomonic"
    STEREOGRAPHIC = "stereographic"


@dataclass(frozen=True)
class ChartPoint:
    """Real coordinates of an octant point in a flat map."""

    chart: ChartKind
    coords: tuple
    pole_corner: Optional[int] = None  # stereographic charts only

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(float(x) for x in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class TorusShape:
    """Side lengths, pairwise angles and total measure of a fiber torus.

    ``pairwise_angles`` maps index pairs ``(i, j)`` (1-based, ``i < j``) to
    the angle between sides ``i`` and ``j``.  Degenerate sides report an
    angle of ``pi/2``.
    """

    side_lengths: tuple
    pairwise_angles: dict
    area_or_volume: float


@dataclass(frozen=True)
class GreatCircleArc:
    """Uniform samples along a great-circle arc with octant-membership flags."""

    points: np.ndarray
    in_octant: np.ndarray

    def __post_init__(self):
        self.points.flags.writeable = False
        self.in_octant.flags.writeable = False


@lru_cache(maxsize=None)
def octant_frame(dim: int) -> np.ndarray:
    """Orthonormal frame rows ``u_0 .. u_{dim-1}`` with ``u_0`` along the
    octant center.

    For ``dim == 3`` the frame is the fixed reference basis of the planar
    triangle picture; higher dimensions complete ``u_0`` by Gram-Schmidt on
    the standard basis, which fixes the corner labels uniquely.
    """
    if dim == 3:
        return np.array(
            [
                [1, 1, 1] / np.sqrt(3.0),
                [-1, 1, 0] / np.sqrt(2.0),
                [-1, -1, 2] / np.sqrt(6.0),
            ]
        )
    u0 = np.ones(dim) / np.sqrt(dim)
    rows = [u0]
    for i in range(1, dim):
        e = np.zeros(dim)
        e[i] = 1.0
        w = e - sum((row @ e) * row for row in rows)
        rows.append(w / np.linalg.norm(w))
    return np.array(rows)


def _chart_scale(dim: int) -> float:
    # unit corner separation: the corner images sit at mutual distance one
    return 1.0 / np.sqrt(2.0 * dim)


def gnomonic_project(radii: Sequence[float]) -> ChartPoint:
    """Central projection of octant radii onto the flat chart at the center.

    The chart is scaled so that the coordinate distance between any pair of
    corner images equals one; the octant center maps to the origin.

    Parameters
    ----------
    radii : sequence of float
        Point on the closed positive octant, ``sum(r**2) == 1``.
    """
    n = np.asarray(radii, dtype=float)
    frame = octant_frame(n.size)
    X = frame @ n
    if X[0] <= 0:
        raise OutsideChart("point not on the positive hemisphere of the chart")
    return ChartPoint(ChartKind.GNOMONIC, tuple(_chart_scale(n.size) * X[1:] / X[0]))


def gnomonic_unproject(point: ChartPoint) -> np.ndarray:
    """Inverse gnomonic map back to octant radii.

    Raises
    ------
    OutsideChart
        If the chart point lies outside the corner simplex.
    """
    x = np.asarray(point.coords, dtype=float)
    dim = x.size + 1
    s = _chart_scale(dim)
    r2 = float(x @ x) / (s * s)
    X0 = 1.0 / np.sqrt(1.0 + r2)
    X = np.concatenate([[X0], (x / s) * X0])
    n = octant_frame(dim).T @ X
    if np.any(n < -1e-10):
        raise OutsideChart("chart point outside the corner simplex")
    return np.clip(n, 0.0, None)


def stereographic_project(radii: Sequence[float], pole_corner: int) -> ChartPoint:
    """Stereographic map centered at a corner, projected from its antipode.

    The pole corner maps to the origin and the opposite equator to the unit
    sphere of the chart; chart axes are the remaining basis directions in
    increasing index order.
    """
    n = np.asarray(radii, dtype=float)
    if not 0 <= pole_corner < n.size:
        raise DimensionMismatch("pole_corner out of range")
    rest = np.delete(n, pole_corner)
    coords = rest / (1.0 + n[pole_corner])
    return ChartPoint(ChartKind.STEREOGRAPHIC, tuple(coords), pole_corner=pole_corner)


def stereographic_unproject(point: ChartPoint) -> np.ndarray:
    """Inverse stereographic map back to octant radii."""
    if point.pole_corner is None:
        raise OutsideChart("stereographic chart point carries no pole corner")
    y = np.asarray(point.coords, dtype=float)
    r2 = float(y @ y)
    pole = (1.0 - r2) / (1.0 + r2)
    rest = 2.0 * y / (1.0 + r2)
    n = np.insert(rest, point.pole_corner, pole)
    if np.any(n < -1e-10):
        raise OutsideChart("chart point outside the octant image")
    return np.clip(n, 0.0, None)


def gnomonic_metric(point: ChartPoint) -> MetricMatrix:
    """Round-sphere metric coefficients in the planar gnomonic chart.

    Only the two-dimensional chart (octant of the 2-sphere) is supported:
    ``g = 6 / (1 + 6 r^2)^2 * ((1 + 6 r^2) I - 6 x x^T)``.
    """
    if point.dim != 2:
        raise DimensionMismatch("gnomonic metric implemented for the planar chart")
    gnomonic_unproject(point)  # membership check; raises OutsideChart
    x = np.asarray(point.coords, dtype=float)
    r2 = float(x @ x)
    g = (6.0 / (1.0 + 6.0 * r2) ** 2) * ((1.0 + 6.0 * r2) * np.eye(2) - 6.0 * np.outer(x, x))
    return MetricMatrix(("x1", "x2"), g)


def trace_great_circle(a: Sequence[float], b: Sequence[float], samples: int) -> GreatCircleArc:
    """Uniformly spaced points on the great-circle arc from ``a`` to ``b``.

    Points are returned even when the arc leaves the closed octant; the
    ``in_octant`` flags record membership so callers can draw full reference
    geodesics.

    Raises
    ------
    DegeneratePair
        If the endpoints are equal or antipodal.
    """
    u = np.asarray(a, dtype=float)
    v = np.asarray(b, dtype=float)
    if u.shape != v.shape:
        raise DimensionMismatch("endpoints of different dimension")
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    c = float(np.clip(u @ v, -1.0, 1.0))
    gamma = np.arccos(c)
    if gamma < 1e-12 or np.pi - gamma < 1e-12:
        raise DegeneratePair("endpoints equal or antipodal")
    t = np.linspace(0.0, 1.0, samples)
    pts = (np.sin((1.0 - t)[:, None] * gamma) * u + np.sin(t[:, None] * gamma) * v) / np.sin(gamma)
    inside = np.all(pts >= -1e-12, axis=1)
    return GreatCircleArc(pts, inside)


def torus_shape(radii: Sequence[float]) -> TorusShape:
    """Shape of the fiber torus over an octant point.

    Side ``k`` has length ``2 pi n_k sqrt(1 - n_k^2)``; the cosine of the
    angle between sides ``i`` and ``j`` is ``-n_i n_j`` over the product of
    the square roots.  The total measure is ``(2 pi)^(d-1)`` times the
    product of all radii, which vanishes on the octant boundary.
    """
    n = np.asarray(radii, dtype=float)
    k = n.size - 1
    lengths = tuple(TWO_PI * n[i] * np.sqrt(max(1.0 - n[i] ** 2, 0.0)) for i in range(1, n.size))
    angles = {}
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            di = np.sqrt(max(1.0 - n[i] ** 2, 0.0))
            dj = np.sqrt(max(1.0 - n[j] ** 2, 0.0))
            if di < EPS_EDGE or dj < EPS_EDGE:
                angles[(i, j)] = np.pi / 2
            else:
                angles[(i, j)] = float(np.arccos(np.clip(-n[i] * n[j] / (di * dj), -1.0, 1.0)))
    measure = float(TWO_PI**k * np.prod(n))
    return TorusShape(lengths, angles, measure)


def numeric_pullback(
    embedding: Callable[[np.ndarray], np.ndarray],
    point: Sequence[float],
    step: float = 1e-5,
    coord_names: Optional[Sequence[str]] = None,
) -> MetricMatrix:
    """Induced Fubini-Study metric of a parametrized family, by central
    differences.

    ``embedding`` maps ``k`` real parameters to homogeneous amplitudes (any
    smooth representative will do; normalization and phase conventions drop
    out of the metric).

    Parameters
    ----------
    embedding : callable
        Map from a length-``k`` float array to a complex amplitude vector.
    point : sequence of float
        Parameter values at which to evaluate the induced metric.
    step : float
        Central-difference step for the tangent representatives.
    """
    x = np.asarray(point, dtype=float)
    k = x.size
    z = np.asarray(embedding(x), dtype=complex)
    tangents = [_central_tangent(embedding, x, i, step) for i in range(k)]
    g = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            g[i, j] = g[j, i] = fs_metric_bilinear(z, tangents[i], tangents[j])
    names = tuple(coord_names) if coord_names else tuple(f"x{i}" for i in range(k))
    return MetricMatrix(names, g)


def _central_tangent(embedding, x, i, step):
    # fourth-order central stencil: truncation ~ step^4 keeps the pullback
    # accurate even where the embedding has large higher derivatives
    e = np.zeros(x.size)
    e[i] = step
    f2p = np.asarray(embedding(x + 2 * e), dtype=complex)
    f1p = np.asarray(embedding(x + e), dtype=complex)
    f1m = np.asarray(embedding(x - e), dtype=complex)
    f2m = np.asarray(embedding(x - 2 * e), dtype=complex)
    return (-f2p + 8.0 * f1p - 8.0 * f1m + f2m) / (12.0 * step)


def fibonacci_sphere(count: int) -> np.ndarray:
    """Deterministic, nearly uniform unit directions on the 2-sphere."""
    i = np.arange(count, dtype=float)
    z = 1.0 - 2.0 * (i + 0.5) / count
    phi = i * np.pi * (3.0 - np.sqrt(5.0))
    s = np.sqrt(1.0 - z * z)
    return np.column_stack([s * np.cos(phi), s * np.sin(phi), z])


def collinearity_residual(points_2d: np.ndarray) -> float:
    """Largest distance from chart points to the chord through the endpoints."""
    p = np.asarray(points_2d, dtype=float)
    a, b = p[0], p[-1]
    chord = b - a
    norm = np.linalg.norm(chord)
    if norm == 0.0:
        raise DegeneratePair("chord endpoints coincide")
    d = p - a
    if p.shape[1] == 2:
        cross = np.abs(d[:, 0] * chord[1] - d[:, 1] * chord[0]) / norm
        return float(np.max(cross))
    # general dimension: distance to the line through a with direction chord
    t = d @ chord / (norm * norm)
    perp = d - np.outer(t, chord)
    return float(np.max(np.linalg.norm(perp, axis=1)))
