"""Named submanifold generators and their membership data.

Each generator yields :class:`SurfaceSample` records: an octant point, its
gnomonic chart image and a description of the fiber locus over it (an affine
phase relation, explicit phases, or the full torus).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .charts import ChartPoint, gnomonic_project
from .errors import InvalidRadius, InvalidSigma
from .states import (
    EPS_EDGE,
    OctantTorusCoords,
    ProjectiveState,
    from_octant_torus,
    normalize_and_gauge,
)

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class PhaseRelation:
    """Affine fiber constraint ``sum(coeffs[k] * nu_{k+1}) = offset (mod 2*pi)``."""

    coeffs: tuple
    offset: float

    def solve(self, free: Sequence[float]) -> tuple:
        """Complete a phase vector from values for all non-pivot phases.

        The pivot is the last phase with nonzero coefficient; it is solved
        from the relation, the others are taken from ``free`` in order.
        """
        k = len(self.coeffs)
        pivot = max(i for i, c in enumerate(self.coeffs) if c != 0)
        free = list(free)
        if len(free) != k - 1:
            raise ValueError(f"expected {k - 1} free phases, got {len(free)}")
        phases = [0.0] * k
        j = 0
        for i in range(k):
            if i == pivot:
                continue
            phases[i] = float(free[j])
            j += 1
        acc = sum(self.coeffs[i] * phases[i] for i in range(k) if i != pivot)
        phases[pivot] = ((self.offset - acc) / self.coeffs[pivot]) % TWO_PI
        return tuple(p % TWO_PI for p in phases)


@dataclass(frozen=True)
class EulerOctantCoords:
    """Euler-angle chart of the CP^3 octant.

    ``tau`` and ``theta`` range over ``[0, pi]``; ``phi`` is limited by
    ``|phi| <= min(tau, pi - tau)`` so that all four radii stay non-negative.
    """

    tau: float
    phi: float
    theta: float

    def radii(self) -> tuple:
        t, f, h = self.tau, self.phi, self.theta
        return (
            float(np.sin((t - f) / 2) * np.sin(h / 2)),
            float(np.sin((t + f) / 2) * np.cos(h / 2)),
            float(np.cos((t - f) / 2) * np.sin(h / 2)),
            float(np.cos((t + f) / 2) * np.cos(h / 2)),
        )


@dataclass(frozen=True)
class SurfaceSample:
    """One octant point of a submanifold with its fiber locus.

    ``fiber`` is a :class:`PhaseRelation`, an explicit tuple of phases
    (entries may be ``None`` on the boundary), or ``None`` when the whole
    fiber torus belongs to the submanifold.
    """

    octant: tuple
    chart: ChartPoint
    fiber: object = None

    def state(self, free_phases: Optional[Sequence[float]] = None) -> ProjectiveState:
        """A representative state over this octant point.

        For a :class:`PhaseRelation` fiber, ``free_phases`` supplies the
        unconstrained phases (zeros by default); for a full-torus fiber it
        supplies all phases.  Phases over vanishing radii are dropped.
        """
        n = np.asarray(self.octant, dtype=float)
        k = n.size - 1
        if isinstance(self.fiber, PhaseRelation):
            phases = self.fiber.solve(free_phases if free_phases is not None else [0.0] * (k - 1))
        elif self.fiber is None:
            phases = tuple(free_phases) if free_phases is not None else (0.0,) * k
        else:
            phases = tuple(self.fiber)
        cleaned = tuple(
            None if n[i + 1] <= EPS_EDGE else (None if p is None else p % TWO_PI)
            for i, p in enumerate(phases)
        )
        return from_octant_torus(OctantTorusCoords(tuple(n), cleaned))


def _sample(radii, fiber=None) -> SurfaceSample:
    n = np.clip(np.asarray(radii, dtype=float), 0.0, None)
    n = n / np.linalg.norm(n)
    return SurfaceSample(tuple(n), gnomonic_project(n), fiber)


SEPARABLE_FIBER = PhaseRelation((1, 1, -1), 0.0)
MAX_ENTANGLED_FIBER = PhaseRelation((1, 1, -1), np.pi)


def separable_surface(grid: tuple) -> list:
    """Sample the separable surface of CP^3.

    The octant locus is the Euler surface ``phi = 0`` swept by the two Euler
    angles; each sample carries the fiber relation ``nu1 + nu2 = nu3``.
    Fixed-angle slices of the grid are great-circle arcs, so in the gnomonic
    chart the surface appears ruled by two families of straight lines.

    Parameters
    ----------
    grid : (int, int)
        Sample counts along the two Euler angles (>= 2 each, endpoints
        included).
    """
    mt, mh = grid
    if mt < 2 or mh < 2:
        raise ValueError("need at least two samples per axis")
    out = []
    for tau in np.linspace(0.0, np.pi, mt):
        for theta in np.linspace(0.0, np.pi, mh):
            radii = EulerOctantCoords(tau, 0.0, theta).radii()
            out.append(_sample(radii, SEPARABLE_FIBER))
    return out


def max_entangled_set(grid: int) -> list:
    """Sample the maximally entangled locus of CP^3.

    The octant trace is the geodesic ``n0 = n3``, ``n1 = n2`` joining two
    opposite edges through the octant center; each sample carries the fiber
    relation ``nu1 + nu2 - nu3 = pi``.
    """
    if grid < 2:
        raise ValueError("need at least two samples")
    out = []
    for t in np.linspace(0.0, np.pi / 2, grid):
        c, s = np.cos(t) / np.sqrt(2.0), np.sin(t) / np.sqrt(2.0)
        out.append(_sample((c, s, s, c), MAX_ENTANGLED_FIBER))
    return out


def constant_sigma_fiber_value(radii: Sequence[float], sigma: float) -> float:
    """Value of ``cos(nu3 - nu1 - nu2)`` forced by a Schmidt angle ``sigma``.

    Returns the right-hand side of the reduced-spectrum condition; the
    octant point supports states of Schmidt angle ``sigma`` exactly when the
    value lies in ``[-1, 1]``.
    """
    n0, n1, n2, n3 = radii
    cs = np.cos(sigma) * np.sin(sigma)
    return float((n0**2 * n3**2 + n1**2 * n2**2 - cs * cs) / (2.0 * n0 * n1 * n2 * n3))


def constant_sigma_region(sigma: float, grid: int) -> list:
    """Sample the octant region carrying states of fixed Schmidt angle.

    Octant points come from a rejection grid over the Euler chart; a point
    is kept when ``(n0 n3 - n1 n2)^2 <= cos^2(sigma) sin^2(sigma) <=
    (n0 n3 + n1 n2)^2``.  Each sample carries the fiber relation
    ``nu3 - nu1 - nu2 = arccos(rhs)`` (one of the two symmetric branches).

    Raises
    ------
    InvalidSigma
        Unless ``0 < sigma < pi/4``.
    """
    if not 0.0 < sigma < np.pi / 4:
        raise InvalidSigma("constant-sigma region defined for 0 < sigma < pi/4")
    cs = np.cos(sigma) * np.sin(sigma)
    out = []
    for tau in np.linspace(0.0, np.pi, grid):
        fmax = min(tau, np.pi - tau)
        for phi in np.linspace(-fmax, fmax, grid):
            for theta in np.linspace(0.0, np.pi, grid):
                n = EulerOctantCoords(tau, phi, theta).radii()
                if min(n) <= EPS_EDGE:
                    continue
                lo, hi = n[0] * n[3] - n[1] * n[2], n[0] * n[3] + n[1] * n[2]
                if lo * lo <= cs * cs <= hi * hi:
                    rhs = constant_sigma_fiber_value(n, sigma)
                    rel = PhaseRelation((-1, -1, 1), float(np.arccos(np.clip(rhs, -1.0, 1.0))))
                    out.append(_sample(n, rel))
    return out


def distance_sphere(corner: int, d: float, samples: int, dim: int = 3) -> list:
    """Points at constant Fubini-Study distance ``d`` from a corner state.

    The octant locus is ``n_corner = cos(d)`` with the remaining radii on a
    sphere of radius ``sin(d)``; the full fiber torus sits over every
    interior locus point.  At ``d = pi/2`` the set degenerates to the
    opposite edge or face.

    Parameters
    ----------
    corner : int
        Basis index of the center state.
    d : float
        Radius in ``(0, pi/2]``.
    samples : int
        Points along the locus curve (CP^2) or per patch axis (CP^3).
    dim : int
        3 for CP^2 radii, 4 for CP^3 radii.
    """
    if not 0.0 < d <= np.pi / 2:
        raise InvalidRadius("distance-sphere radius must lie in (0, pi/2]")
    if dim not in (3, 4):
        raise InvalidRadius("octant dimension must be 3 or 4")
    if not 0 <= corner < dim:
        raise InvalidRadius("corner index out of range")
    cd, sd = np.cos(d), np.sin(d)
    out = []
    if dim == 3:
        for psi in np.linspace(0.0, np.pi / 2, samples):
            rest = sd * np.array([np.cos(psi), np.sin(psi)])
            out.append(_sample(np.insert(rest, corner, cd)))
    else:
        for psi in np.linspace(0.0, np.pi / 2, samples):
            for chi in np.linspace(0.0, np.pi / 2, samples):
                rest = sd * np.array(
                    [np.sin(psi) * np.cos(chi), np.sin(psi) * np.sin(chi), np.cos(psi)]
                )
                out.append(_sample(np.insert(rest, corner, cd)))
    return out


class Spin1Seed(enum.Enum):
    """Which S_z eigenstate the rotation orbit is seeded from."""

    SPIN_UP = 1
    SPIN_ZERO = 0


def _wigner_d1(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    r = s / np.sqrt(2.0)
    return np.array(
        [
            [(1 + c) / 2, -r, (1 - c) / 2],
            [r, c, -r],
            [(1 - c) / 2, r, (1 + c) / 2],
        ]
    )


def spin1_amplitudes(seed: Spin1Seed, direction: Sequence[float]) -> np.ndarray:
    """Raw amplitudes of the rotated spin-1 eigenstate (smooth in direction).

    The basis order is ``(m=+1, m=0, m=-1)``, matching the octant corners;
    the rotation is ``exp(-i phi Jz) exp(-i theta Jy)`` taking the z axis to
    ``direction``.
    """
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    theta = np.arccos(np.clip(n[2], -1.0, 1.0))
    phi = np.arctan2(n[1], n[0])
    col = {Spin1Seed.SPIN_UP: 0, Spin1Seed.SPIN_ZERO: 1}[seed]
    rz = np.diag([np.exp(-1j * phi), 1.0, np.exp(1j * phi)])
    return (rz @ _wigner_d1(theta))[:, col]


def spin1_state(seed: Spin1Seed, direction: Sequence[float]) -> ProjectiveState:
    """Gauge representative of the rotated spin-1 eigenstate."""
    return normalize_and_gauge(spin1_amplitudes(seed, direction))


def spin1_orbit(seed: Spin1Seed, directions: Sequence[Sequence[float]]) -> list:
    """Rotation orbit of a spin-1 eigenstate over the given unit directions."""
    return [spin1_state(seed, d) for d in directions]


def mub_bases() -> tuple:
    """Four mutually unbiased orthonormal bases of a 3-level system.

    Returns the standard basis followed by the three Fourier-family bases
    built from the cube root of unity; every vector of the non-standard
    bases sits in the fiber torus over the octant center, and all cross
    overlaps have magnitude ``1/sqrt(3)``.
    """
    w = np.exp(2j * np.pi / 3)
    bases = [np.eye(3, dtype=complex)]
    for m in range(3):
        b = np.array(
            [[w ** (m * j * j + j * k) for k in range(3)] for j in range(3)]
        ) / np.sqrt(3.0)
        bases.append(b)
    for b in bases:
        b.flags.writeable = False
    return tuple(bases)


def max_entangled_amplitudes(angles: Sequence[float]) -> np.ndarray:
    """Smooth 3-parameter embedding of the maximally entangled set.

    ``angles = (a, b, c)`` are Euler angles of an SU(2) element
    ``[[alpha, beta], [-conj(beta), conj(alpha)]]``; the amplitudes are
    ``(alpha, beta, -conj(beta), conj(alpha)) / sqrt(2)``.
    """
    a, b, c = angles
    alpha = np.exp(-0.5j * (a + c)) * np.cos(b / 2)
    beta = -np.exp(-0.5j * (a - c)) * np.sin(b / 2)
    return np.array([alpha, beta, -beta.conjugate(), alpha.conjugate()]) / np.sqrt(2.0)
