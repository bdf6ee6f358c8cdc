"""Points of CP^n: homogeneous amplitudes, octant-torus coordinates and the
Fubini-Study geometry connecting the two.

A projective point is stored as a normalized complex amplitude vector with a
fixed gauge (first nonzero amplitude real and positive).  The octant-torus
view splits the same point into non-negative radii ``n_0 .. n_n`` on the
positive octant of the round n-sphere plus fiber-torus phases ``nu_1 .. nu_n``
relative to the gauge carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, EdgePoint, MissingPhase, ZeroVector

#: Tolerance for unit-norm checks on amplitude and radius vectors.
EPS_NORM = 1e-12
#: Below this norm a raw vector counts as the zero vector.
EPS_ZERO = 1e-14
#: Radii at or below this threshold sit on the octant boundary; their fiber
#: phase carries no information and is stored as ``None``.
EPS_EDGE = 1e-9

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class ProjectiveState:
    """A point of CP^(N-1) as a gauged, normalized amplitude vector.

    Use :func:`normalize_and_gauge` to construct one from raw amplitudes;
    the constructor only checks the invariants.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amplitudes, dtype=complex)
        if amp.ndim != 1 or amp.size < 2:
            raise DimensionMismatch("amplitude vector must be 1-D with N >= 2")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > EPS_NORM:
            raise ZeroVector(f"state not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
        carrier = _carrier_index(amp)
        z = amp[carrier]
        if abs(z.imag) > EPS_NORM or z.real <= 0:
            raise ZeroVector("gauge violated: carrier amplitude not real positive")
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    @property
    def carrier_index(self) -> int:
        """Index of the gauge carrier (first amplitude above ``EPS_EDGE``)."""
        return _carrier_index(self.amplitudes)


@dataclass(frozen=True)
class OctantTorusCoords:
    """Radii on the spherical (hyper)octant plus fiber-torus phases.

    ``phases[k]`` is the phase ``nu_{k+1}`` of amplitude ``k+1`` relative to
    the gauge carrier, in ``[0, 2*pi)``, or ``None`` exactly when the radius
    ``radii[k+1]`` vanishes (within ``EPS_EDGE``).
    """

    radii: tuple
    phases: tuple

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=float)
        if r.ndim != 1 or r.size < 2:
            raise DimensionMismatch("radii must be 1-D with N >= 2")
        if len(self.phases) != r.size - 1:
            raise DimensionMismatch("need one phase per non-leading radius")
        if np.any(r < -EPS_EDGE):
            raise ZeroVector("octant radii must be non-negative")
        if abs(np.sum(r * r) - 1.0) > 1e-9:
            raise ZeroVector("radii do not lie on the unit sphere")
        for k, nu in enumerate(self.phases):
            if nu is None:
                continue
            if not (0.0 <= nu < TWO_PI + EPS_NORM):
                raise ZeroVector(f"phase nu_{k + 1} outside [0, 2*pi)")
        object.__setattr__(self, "radii", tuple(float(x) for x in r))
        object.__setattr__(
            self, "phases", tuple(None if p is None else float(p) for p in self.phases)
        )

    @property
    def dim(self) -> int:
        return len(self.radii)

    def is_interior(self, eps: float = EPS_EDGE) -> bool:
        """True when every radius exceeds ``eps``."""
        return all(r > eps for r in self.radii)


@dataclass(frozen=True)
class TangentVector:
    """A tangent direction at ``base`` given by a homogeneous representative."""

    base: ProjectiveState
    delta: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.delta, dtype=complex)
        if d.shape != self.base.amplitudes.shape:
            raise DimensionMismatch("delta must match the base dimension")
        if not np.all(np.isfinite(d.view(float))):
            raise ZeroVector("delta has non-finite entries")
        d.flags.writeable = False
        object.__setattr__(self, "delta", d)


@dataclass(frozen=True)
class MetricMatrix:
    """Symmetric coefficient matrix of a metric in named coordinates."""

    coords: tuple
    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        k = len(self.coords)
        if m.shape != (k, k):
            raise DimensionMismatch("entries must be square over the named coords")
        m = 0.5 * (m + m.T)
        m.flags.writeable = False
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "entries", m)


def _carrier_index(amp: np.ndarray) -> int:
    idx = np.flatnonzero(np.abs(amp) > EPS_EDGE)
    if idx.size == 0:
        idx = np.flatnonzero(np.abs(amp) > 0)
        if idx.size == 0:
            raise ZeroVector("zero amplitude vector has no gauge carrier")
    return int(idx[0])


def normalize_and_gauge(raw: Sequence[complex]) -> ProjectiveState:
    """Map a raw amplitude vector to its unique gauge representative.

    Two inputs that differ by a nonzero complex scalar produce the same
    output: the vector is normalized and multiplied by a phase making the
    first nonzero amplitude real and strictly positive.

    Parameters
    ----------
    raw : sequence of complex
        Any homogeneous representative; need not be normalized.

    Raises
    ------
    ZeroVector
        If ``raw`` has norm below ``EPS_ZERO``.
    """
    amp = np.asarray(raw, dtype=complex).copy()
    norm = np.linalg.norm(amp)
    if norm < EPS_ZERO:
        raise ZeroVector("cannot gauge the zero vector")
    amp /= norm
    carrier = _carrier_index(amp)
    phase = amp[carrier] / abs(amp[carrier])
    amp *= phase.conjugate()
    amp[carrier] = abs(amp[carrier])
    return ProjectiveState(amp)


def to_octant_torus(state: ProjectiveState) -> OctantTorusCoords:
    """Split a projective point into octant radii and fiber phases.

    The radii are the amplitude magnitudes.  Phase ``nu_k`` is the argument
    of amplitude ``k`` relative to the gauge carrier, reduced to
    ``[0, 2*pi)``; phases of vanishing radii are ``None``.
    """
    amp = state.amplitudes
    radii = np.abs(amp)
    ref = np.angle(amp[state.carrier_index])
    phases = []
    for k in range(1, amp.size):
        if radii[k] <= EPS_EDGE:
            phases.append(None)
        else:
            phases.append(float((np.angle(amp[k]) - ref) % TWO_PI))
    return OctantTorusCoords(tuple(radii), tuple(phases))


def from_octant_torus(coords: OctantTorusCoords) -> ProjectiveState:
    """Rebuild the gauge representative from octant-torus coordinates.

    Raises
    ------
    MissingPhase
        If a phase is ``None`` while its radius exceeds ``EPS_EDGE``.
    """
    r = np.asarray(coords.radii, dtype=float)
    amp = np.zeros(r.size, dtype=complex)
    amp[0] = r[0]
    for k in range(1, r.size):
        if r[k] <= EPS_EDGE:
            amp[k] = 0.0
            continue
        nu = coords.phases[k - 1]
        if nu is None:
            raise MissingPhase(f"phase nu_{k} absent but n_{k} = {r[k]:.3g} > 0")
        amp[k] = r[k] * np.exp(1j * nu)
    return normalize_and_gauge(amp)


def fs_distance(a: ProjectiveState, b: ProjectiveState) -> float:
    """Fubini-Study distance between two states, in ``[0, pi/2]``.

    ``cos^2 d = |<a|b>|^2`` for normalized representatives; the value is
    symmetric and independent of the gauge.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"dim {a.dim} vs {b.dim}")
    overlap = abs(np.vdot(a.amplitudes, b.amplitudes))
    return float(np.arccos(np.clip(overlap, 0.0, 1.0)))


def fs_metric_bilinear(z: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Fubini-Study metric on homogeneous representatives.

    Real bilinear form in the tangent representatives ``u`` and ``v`` at the
    (not necessarily normalized) representative ``z``.  Invariant under
    ``u -> u + lambda * z`` and under rescaling ``z``.
    """
    zz = np.vdot(z, z).real
    val = zz * np.vdot(u, v) - np.vdot(u, z) * np.vdot(z, v)
    return float(val.real) / (zz * zz)


def fs_metric_homogeneous(v: TangentVector) -> float:
    """Squared Fubini-Study speed ``ds^2`` of a tangent direction.

    Returns the quadratic form of the metric evaluated on ``v.delta``; the
    result is unchanged by adding any complex multiple of the base
    representative to ``delta``.
    """
    z = v.base.amplitudes
    return fs_metric_bilinear(z, v.delta, v.delta)


def octant_torus_metric(coords: OctantTorusCoords) -> MetricMatrix:
    """Metric coefficients in octant-torus coordinates at an interior point.

    The leading radius ``n_0`` is eliminated through the sphere constraint,
    so the coordinates are ``(n_1 .. n_n, nu_1 .. nu_n)``.  The radius block
    is the round-sphere metric ``I + m m^T / n_0^2`` with ``m = (n_1 .. n_n)``
    and the phase block is ``diag(n_k^2) - (n^2)(n^2)^T``.

    Raises
    ------
    EdgePoint
        If any radius is at or below ``EPS_EDGE`` (the chart degenerates).
    """
    r = np.asarray(coords.radii, dtype=float)
    if np.any(r <= EPS_EDGE):
        raise EdgePoint("octant-torus metric undefined on the boundary")
    m = r[1:]
    n0sq = r[0] * r[0]
    k = m.size
    g = np.zeros((2 * k, 2 * k))
    g[:k, :k] = np.eye(k) + np.outer(m, m) / n0sq
    msq = m * m
    g[k:, k:] = np.diag(msq) - np.outer(msq, msq)
    names = tuple(f"n{i}" for i in range(1, k + 1)) + tuple(
        f"nu{i}" for i in range(1, k + 1)
    )
    return MetricMatrix(names, g)


def wrap_angle(x: float) -> float:
    """Reduce an angle to ``(-pi, pi]``."""
    return float(np.angle(np.exp(1j * x)))


def phase_or_none(coords: OctantTorusCoords, k: int) -> Optional[float]:
    """Phase ``nu_k`` (1-based) of ``coords``, or ``None`` when absent."""
    return coords.phases[k - 1]
