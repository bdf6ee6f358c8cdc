"""The symplectic 2-form of CP^3 in octant-torus and orbit coordinates,
with closedness, Lagrangian-pullback and Liouville-volume checks.

The convention here is four times the Kaehler form of the Fubini-Study
metric, so the metric volume element is the top wedge power of ``Omega/4``
divided by ``3!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from .charts import _central_tangent
from .errors import DimensionMismatch, EdgePoint
from .orbits import OrbitCoords
from .states import EPS_EDGE, OctantTorusCoords

OCTANT_FORM_COORDS = ("n1", "n2", "n3", "nu1", "nu2", "nu3")
ORBIT_FORM_COORDS = ("sigma", "tau", "theta1", "phi1", "theta2", "phi2")


@dataclass(frozen=True)
class TwoFormMatrix:
    """Antisymmetric coefficient matrix of a 2-form in named coordinates."""

    coords: tuple
    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        k = len(self.coords)
        if m.shape != (k, k):
            raise DimensionMismatch("entries must be square over the named coords")
        m = 0.5 * (m - m.T)
        m.flags.writeable = False
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "entries", m)


def omega_bilinear(z: np.ndarray, u: np.ndarray, v: np.ndarray) -> float:
    """Symplectic 2-form on homogeneous representatives.

    Antisymmetric real bilinear form in the tangent representatives ``u``
    and ``v`` at ``z``; like the metric it is insensitive to components
    along ``z`` and to rescaling of ``z``.
    """
    zz = np.vdot(z, z).real
    val = np.vdot(v, u).imag - (np.vdot(z, u) * np.vdot(v, z)).imag
    return -4.0 * float(val) / (zz * zz)


def omega_octant(coords: OctantTorusCoords) -> TwoFormMatrix:
    """The 2-form in octant-torus coordinates ``(n_i, nu_i)`` of CP^3.

    Each conjugate pair contributes ``4 n_i dn_i ^ dnu_i`` and nothing
    else; equivalently ``n_i^2`` is canonically conjugate to ``nu_i``.

    Raises
    ------
    EdgePoint
        On the octant boundary, where the coordinates degenerate.
    """
    if coords.dim != 4:
        raise DimensionMismatch("octant 2-form implemented for CP^3")
    r = np.asarray(coords.radii, dtype=float)
    if np.any(r <= EPS_EDGE):
        raise EdgePoint("2-form coordinates degenerate on the boundary")
    m = np.zeros((6, 6))
    for i in range(3):
        m[i, 3 + i] = 4.0 * r[i + 1]
        m[3 + i, i] = -4.0 * r[i + 1]
    return TwoFormMatrix(OCTANT_FORM_COORDS, m)


def omega_orbit(c: OrbitCoords) -> TwoFormMatrix:
    """The 2-form in the coordinates ``(sigma, tau, theta1, phi1, theta2,
    phi2)`` of the orbit chart.

    Restricted to a constant-``sigma`` orbit the first line drops and the
    form degenerates to rank four, tending to the product form of two
    spheres as ``sigma -> 0``; ``tau`` runs along the null directions.
    """
    s2, c2 = np.sin(2 * c.sigma), np.cos(2 * c.sigma)
    SIG, TAU, TH1, PH1, TH2, PH2 = range(6)
    m = np.zeros((6, 6))

    def put(i, j, v):
        m[i, j] = v
        m[j, i] = -v

    put(SIG, TAU, 2.0 * s2)
    put(SIG, PH1, 2.0 * s2 * np.cos(c.theta1))
    put(SIG, PH2, 2.0 * s2 * np.cos(c.theta2))
    put(TH1, PH1, c2 * np.sin(c.theta1))
    put(TH2, PH2, c2 * np.sin(c.theta2))
    return TwoFormMatrix(ORBIT_FORM_COORDS, m)


def closedness_residual(
    form_field: Callable[[np.ndarray], np.ndarray],
    point: Sequence[float],
    step: float = 1e-4,
) -> float:
    """Largest component of the finite-difference exterior derivative.

    ``form_field`` maps a coordinate vector to the antisymmetric coefficient
    matrix of a 2-form; the residual is ``max |d_i w_jk + d_j w_ki +
    d_k w_ij|`` over all index triples, central differences at ``step``.
    """
    x = np.asarray(point, dtype=float)
    k = x.size
    grads = np.empty((k, k, k))
    for i in range(k):
        e = np.zeros(k)
        e[i] = step
        grads[i] = (np.asarray(form_field(x + e)) - np.asarray(form_field(x - e))) / (2 * step)
    worst = 0.0
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                d = grads[i][j, l] - grads[j][i, l] + grads[l][i, j]
                worst = max(worst, abs(d))
    return worst


def omega_numeric_pullback(
    embedding: Callable[[np.ndarray], np.ndarray],
    point: Sequence[float],
    step: float = 1e-5,
) -> np.ndarray:
    """Pullback of the 2-form under a parametrized family, by central
    differences on the homogeneous representatives."""
    x = np.asarray(point, dtype=float)
    k = x.size
    z = np.asarray(embedding(x), dtype=complex)
    tangents = [_central_tangent(embedding, x, i, step) for i in range(k)]
    m = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            m[i, j] = omega_bilinear(z, tangents[i], tangents[j])
            m[j, i] = -m[i, j]
    return m


def lagrangian_residual(
    embedding: Callable[[np.ndarray], np.ndarray],
    grid: Iterable[Sequence[float]],
    step: float = 1e-5,
) -> float:
    """Largest pullback component of the 2-form over a parameter grid.

    A three-parameter embedding into CP^3 is Lagrangian exactly when this
    vanishes; the maximally entangled set is the canonical example.
    """
    worst = 0.0
    for point in grid:
        m = omega_numeric_pullback(embedding, point, step)
        worst = max(worst, float(np.max(np.abs(m))))
    return worst


def pfaffian(a: np.ndarray) -> float:
    """Pfaffian of a small antisymmetric matrix (recursive expansion)."""
    m = np.asarray(a, dtype=float)
    n = m.shape[0]
    if n % 2:
        return 0.0
    if n == 0:
        return 1.0
    if n == 2:
        return float(m[0, 1])
    total = 0.0
    for j in range(1, n):
        keep = [k for k in range(n) if k not in (0, j)]
        total += (-1.0) ** (j - 1) * m[0, j] * pfaffian(m[np.ix_(keep, keep)])
    return float(total)


def liouville_volume_density(point: Union[OctantTorusCoords, OrbitCoords]) -> float:
    """Liouville volume density ``|Pf(Omega/4)|`` in either coordinate system.

    Equals the metric volume density ``sqrt(det g)`` in the same
    coordinates: the top wedge power of ``Omega/4`` over ``3!`` is the
    Pfaffian times the coordinate volume element (up to orientation).
    """
    if isinstance(point, OctantTorusCoords):
        form = omega_octant(point)
    elif isinstance(point, OrbitCoords):
        form = omega_orbit(point)
    else:
        raise DimensionMismatch("expected octant-torus or orbit coordinates")
    return abs(pfaffian(form.entries / 4.0))
