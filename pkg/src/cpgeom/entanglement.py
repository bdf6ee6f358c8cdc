"""Two-qubit structure on CP^3: coefficient matrices, partial trace, Schmidt
decomposition, entanglement predicates and closest separable states.

The tensor split is hard-wired: amplitudes ``(Z0, Z1, Z2, Z3)`` are the
row-major entries of the 2x2 coefficient matrix ``C``, so ``Z0 = C[0,0]``
labels ``|0>|0>`` and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .charts import fibonacci_sphere
from .errors import DimensionMismatch, NotMaxEntangled
from .states import (
    EPS_EDGE,
    OctantTorusCoords,
    ProjectiveState,
    fs_distance,
    normalize_and_gauge,
    wrap_angle,
)

#: Default tolerance for the separability and maximal-entanglement predicates.
PREDICATE_TOL = 1e-9
#: Schmidt angles within this of ``pi/4`` flag the decomposition as non-unique.
SIGMA_TOL = 1e-9


@dataclass(frozen=True)
class SchmidtData:
    """Schmidt form ``C = global_phase * u1 @ diag(c) @ u2`` of a two-qubit state.

    ``coefficients`` are sorted descending with ``c0^2 + c1^2 = 1``;
    ``schmidt_angle`` is ``arctan(c1 / c0)`` in ``[0, pi/4]``.  Both local
    factors are special unitary; the residual overall phase is recorded in
    ``global_phase`` (physically irrelevant for the projective point).
    ``non_unique`` marks the maximally entangled case where the singular
    vectors are a convention, not a property of the state.
    """

    coefficients: tuple
    schmidt_angle: float
    u1: np.ndarray
    u2: np.ndarray
    global_phase: complex
    non_unique: bool


@dataclass(frozen=True)
class ReducedDensity:
    """Reduced density matrix of subsystem A with its Bloch radius."""

    matrix: np.ndarray
    bloch_radius: float


def as_coefficient_matrix(state: ProjectiveState) -> np.ndarray:
    """Reshape a 4-amplitude state into its 2x2 coefficient matrix."""
    if state.dim != 4:
        raise DimensionMismatch("coefficient matrix requires a two-qubit state")
    return state.amplitudes.reshape(2, 2).copy()


def from_coefficient_matrix(c: np.ndarray) -> ProjectiveState:
    """Inverse of :func:`as_coefficient_matrix` (gauges the result)."""
    c = np.asarray(c, dtype=complex)
    if c.shape != (2, 2):
        raise DimensionMismatch("coefficient matrix must be 2x2")
    return normalize_and_gauge(c.reshape(-1))


def product_state(a: Sequence[complex], b: Sequence[complex]) -> ProjectiveState:
    """The separable state with coefficient matrix ``outer(a, b)``."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.size != 2 or b.size != 2:
        raise DimensionMismatch("factors must be single-qubit amplitude pairs")
    return normalize_and_gauge(np.outer(a, b).reshape(-1))


def apply_local_unitaries(state: ProjectiveState, u1: np.ndarray, u2: np.ndarray) -> ProjectiveState:
    """Act with ``u1 (x) u2`` on a two-qubit state."""
    c = as_coefficient_matrix(state)
    return from_coefficient_matrix(u1 @ c @ u2.T)


def partial_trace_A(state: ProjectiveState) -> ReducedDensity:
    """Reduced density matrix ``rho_A = C C^dagger`` of the first qubit."""
    c = as_coefficient_matrix(state)
    rho = c @ c.conj().T
    ev = np.linalg.eigvalsh(rho)
    return ReducedDensity(rho, float(abs(ev[1] - ev[0])))


def schmidt_decompose(state: ProjectiveState) -> SchmidtData:
    """Schmidt decomposition of a two-qubit state via the 2x2 SVD.

    Singular values are real, non-negative and sorted descending; each local
    unitary is rescaled to unit determinant and the leftover overall phase
    recorded.  Reconstruction ``global_phase * u1 @ diag(c) @ u2`` reproduces
    the coefficient matrix exactly.
    """
    c = as_coefficient_matrix(state)
    u, s, vh = np.linalg.svd(c)
    phase_u = np.exp(-0.5j * np.angle(np.linalg.det(u)))
    phase_v = np.exp(-0.5j * np.angle(np.linalg.det(vh)))
    u1 = u * phase_u
    u2 = vh * phase_v
    global_phase = (phase_u * phase_v).conjugate()
    sigma = float(np.arctan2(s[1], s[0]))
    u1.flags.writeable = False
    u2.flags.writeable = False
    return SchmidtData(
        coefficients=(float(s[0]), float(s[1])),
        schmidt_angle=sigma,
        u1=u1,
        u2=u2,
        global_phase=complex(global_phase),
        non_unique=bool(np.pi / 4 - sigma < SIGMA_TOL),
    )


def is_separable(state: ProjectiveState, tol: float = PREDICATE_TOL) -> bool:
    """True when the coefficient matrix is rank one, ``|det C| < tol``."""
    c = as_coefficient_matrix(state)
    return bool(abs(np.linalg.det(c)) < tol)


def is_max_entangled(state: ProjectiveState, tol: float = PREDICATE_TOL) -> bool:
    """True when the reduced state is maximally mixed, ``C C^dag = I/2``."""
    c = as_coefficient_matrix(state)
    dev = c @ c.conj().T - 0.5 * np.eye(2)
    return bool(np.linalg.norm(dev) < tol)


def separability_coordinate_residuals(
    coords: OctantTorusCoords,
) -> Tuple[float, Optional[float]]:
    """Residuals of the two separability conditions in octant coordinates.

    Returns ``(n0*n3 - n1*n2, wrap(nu1 + nu2 - nu3))``; the phase residual is
    ``None`` whenever one of the three phases is absent.  Both vanish exactly
    on separable interior points.
    """
    if coords.dim != 4:
        raise DimensionMismatch("separability residuals live on CP^3")
    n = coords.radii
    radial = n[0] * n[3] - n[1] * n[2]
    nu = coords.phases
    if any(p is None for p in nu):
        return float(radial), None
    return float(radial), wrap_angle(nu[0] + nu[1] - nu[2])


def max_entangled_coordinate_residuals(
    coords: OctantTorusCoords,
) -> Tuple[float, float, Optional[float]]:
    """Residuals ``(n0 - n3, n1 - n2, wrap(nu1 + nu2 - nu3 - pi))``.

    All three vanish exactly on maximally entangled interior points; the
    phase residual is ``None`` when a needed phase is absent.
    """
    if coords.dim != 4:
        raise DimensionMismatch("maximal-entanglement residuals live on CP^3")
    n = coords.radii
    nu = coords.phases
    if any(p is None for p in nu):
        phase = None
    else:
        phase = wrap_angle(nu[0] + nu[1] - nu[2] - np.pi)
    return float(n[0] - n[3]), float(n[1] - n[2]), phase


def closest_separable(state: ProjectiveState) -> Tuple[ProjectiveState, float, bool]:
    """Nearest separable state, its distance and whether it is unique.

    In Schmidt form the nearest point of the separable surface is the
    dominant product term, at distance equal to the Schmidt angle.  For a
    maximally entangled state a whole 2-sphere of separable states is
    equidistant; one member is returned with ``unique=False``.
    """
    sd = schmidt_decompose(state)
    corner = sd.u1 @ np.diag([1.0, 0.0]).astype(complex) @ sd.u2
    nearest = from_coefficient_matrix(corner)
    return nearest, sd.schmidt_angle, not sd.non_unique


def _direction_spinor(direction: Sequence[float]) -> np.ndarray:
    n = np.asarray(direction, dtype=float)
    n = n / np.linalg.norm(n)
    theta = np.arccos(np.clip(n[2], -1.0, 1.0))
    phi = np.arctan2(n[1], n[0])
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def collapse_direction(state: ProjectiveState, direction: Sequence[float]) -> ProjectiveState:
    """Equidistant nearest separable state selected by a Bloch direction.

    For a maximally entangled state the coefficient matrix is proportional
    to a unitary ``W``; the separable states at minimal distance are the
    products ``a (x) conj(W^dag a)`` with ``a`` the spinor of ``direction``.
    """
    c = as_coefficient_matrix(state)
    w = np.sqrt(2.0) * c
    if np.linalg.norm(w @ w.conj().T - np.eye(2)) > 1e-8:
        raise NotMaxEntangled("collapse family defined for maximally entangled states")
    a = _direction_spinor(direction)
    b = (w.conj().T @ a).conjugate()
    return product_state(a, b)


def collapse_sphere(state: ProjectiveState, samples: int) -> list:
    """Sample the 2-sphere of equidistant nearest separable states.

    Directions are taken from the deterministic Fibonacci grid, so a fixed
    ``samples`` count always yields the same family.
    """
    return [collapse_direction(state, d) for d in fibonacci_sphere(samples)]


def schmidt_reconstruction_residual(state: ProjectiveState, data: SchmidtData) -> float:
    """Norm of ``global_phase * u1 diag(c) u2 - C`` (should be ~ 0)."""
    c = as_coefficient_matrix(state)
    rebuilt = data.global_phase * data.u1 @ np.diag(data.coefficients).astype(complex) @ data.u2
    return float(np.linalg.norm(rebuilt - c))
