"""Two round simplices: Schmidt coefficients of pure states and eigenvalue
vectors of diagonal density matrices.

Statistical mixing is affine in the barycentric coordinates ``p_i`` but the
statistically meaningful distance is the Bhattacharyya angle, the spherical
distance between the square-root points; drawn in gnomonic coordinates the
simplex is flat while mixtures become curves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .charts import ChartPoint, gnomonic_project
from .errors import DimensionMismatch, ZeroVector
from .states import ProjectiveState, fs_distance, normalize_and_gauge

SIMPLEX_TOL = 1e-12


def probability_vector(p: Sequence[float]) -> np.ndarray:
    """Validate barycentric coordinates: non-negative entries summing to one."""
    q = np.asarray(p, dtype=float)
    if q.ndim != 1 or q.size < 2:
        raise DimensionMismatch("probability vector must be 1-D with N >= 2")
    if np.any(q < -SIMPLEX_TOL) or abs(q.sum() - 1.0) > SIMPLEX_TOL:
        raise ZeroVector("not a point of the probability simplex")
    return np.clip(q, 0.0, None)


def mixing_line(p: Sequence[float], q: Sequence[float], t: float) -> np.ndarray:
    """Statistical mixture ``(1 - t) p + t q`` of two diagonal densities."""
    a, b = probability_vector(p), probability_vector(q)
    if a.size != b.size:
        raise DimensionMismatch("mixing endpoints of different dimension")
    return (1.0 - t) * a + t * b


def round_distance(p: Sequence[float], q: Sequence[float]) -> float:
    """Bhattacharyya angle ``arccos sum(sqrt(p_i q_i))`` in ``[0, pi/2]``."""
    a, b = probability_vector(p), probability_vector(q)
    if a.size != b.size:
        raise DimensionMismatch("distance between simplices of different dimension")
    return float(np.arccos(np.clip(np.sum(np.sqrt(a * b)), 0.0, 1.0)))


def simplex_to_gnomonic(p: Sequence[float]) -> ChartPoint:
    """Gnomonic image of a simplex point through the square-root map."""
    return gnomonic_project(np.sqrt(probability_vector(p)))


def schmidt_state(coeffs: Sequence[float]) -> ProjectiveState:
    """The pure state ``sum c_i |ii>`` of an N x N system."""
    c = np.asarray(coeffs, dtype=float)
    if np.any(c < -SIMPLEX_TOL) or abs(np.sum(c * c) - 1.0) > 1e-9:
        raise ZeroVector("Schmidt coefficients must be non-negative with unit square sum")
    n = c.size
    amp = np.zeros(n * n, dtype=complex)
    amp[np.arange(n) * (n + 1)] = c
    return normalize_and_gauge(amp)


@dataclass(frozen=True)
class SchmidtSimplexDiagnostics:
    """Result of checking that the Schmidt simplex is round."""

    pairs_checked: int
    max_deviation: float


def schmidt_simplex_check(
    coeffs: Sequence[float],
    partners: Optional[Sequence[Sequence[float]]] = None,
    count: int = 20,
    seed: int = 0,
) -> SchmidtSimplexDiagnostics:
    """Verify the round intrinsic geometry of the Schmidt simplex.

    Compares the Fubini-Study distance between Schmidt-form states against
    the octant arc distance ``arccos(c . c')`` of their coefficient vectors,
    for each partner vector (random unit-octant partners by default).
    """
    c = np.asarray(coeffs, dtype=float)
    base = schmidt_state(c)
    if partners is None:
        rng = np.random.default_rng(seed)
        raw = np.abs(rng.standard_normal((count, c.size)))
        partners = raw / np.linalg.norm(raw, axis=1, keepdims=True)
    worst = 0.0
    total = 0
    for other in partners:
        o = np.asarray(other, dtype=float)
        d_fs = fs_distance(base, schmidt_state(o))
        d_arc = float(np.arccos(np.clip(np.dot(c, o), -1.0, 1.0)))
        worst = max(worst, abs(d_fs - d_arc))
        total += 1
    return SchmidtSimplexDiagnostics(total, worst)
