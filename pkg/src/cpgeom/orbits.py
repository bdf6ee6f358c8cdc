"""Local-unitary orbit geometry of two-qubit states of fixed Schmidt angle.

States of Schmidt angle ``sigma`` in ``(0, pi/4)`` form five-dimensional
orbits of ``U(2) x U(2)``; this module provides the Euler-angle chart of an
orbit, its intrinsic metric, volume density, the induced Schmidt-angle
distribution, and the trace of the orbit's extrinsic curvature.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import OutOfRange
from .states import ProjectiveState, MetricMatrix, normalize_and_gauge

ORBIT_COORD_NAMES = ("theta1", "phi1", "theta2", "phi2", "tau")


@dataclass(frozen=True)
class OrbitCoords:
    """Euler-angle chart of a constant-Schmidt-angle orbit.

    The chart covers the orbit interior: ``sigma`` in ``(0, pi/4)``,
    ``theta1, theta2`` in ``(0, pi)``, ``phi1, phi2, tau`` in ``[0, 2*pi)``.
    Only the sum of the two middle rotation angles matters, so a single
    ``tau`` appears.
    """

    sigma: float
    theta1: float
    phi1: float
    theta2: float
    phi2: float
    tau: float

    def __post_init__(self):
        if not 0.0 < self.sigma < np.pi / 4:
            raise OutOfRange("sigma must lie in (0, pi/4)")
        for name in ("theta1", "theta2"):
            v = getattr(self, name)
            if not 0.0 < v < np.pi:
                raise OutOfRange(f"{name} must lie in (0, pi)")
        for name in ("phi1", "phi2", "tau"):
            v = getattr(self, name)
            if not 0.0 <= v < 2 * np.pi:
                raise OutOfRange(f"{name} must lie in [0, 2*pi)")


def _rz(a: float) -> np.ndarray:
    # exp(-i a Lz), Lz = diag(1, -1)/2
    return np.diag([np.exp(-0.5j * a), np.exp(0.5j * a)])


def _ry(a: float) -> np.ndarray:
    # exp(+i a Ly), Ly = [[0, -i], [i, 0]]/2
    c, s = np.cos(a / 2), np.sin(a / 2)
    return np.array([[c, s], [-s, c]], dtype=complex)


def orbit_embed_amplitudes(
    sigma: float, theta1: float, phi1: float, theta2: float, phi2: float, tau: float
) -> np.ndarray:
    """Raw amplitudes of the orbit chart point (smooth in all angles).

    The coefficient matrix is the Schmidt diagonal ``diag(cos s, sin s)``
    conjugated by z-y-z rotations of the two factors, with the two middle z
    angles merged into ``tau``.
    """
    cs = np.diag([np.cos(sigma), np.sin(sigma)]).astype(complex)
    left = _rz(phi1) @ _ry(theta1)
    right = _rz(tau) @ _ry(-theta2) @ _rz(phi2)
    return (left @ cs @ right).reshape(-1)


def orbit_embed(c: OrbitCoords) -> ProjectiveState:
    """Gauge representative of the orbit chart point; its Schmidt angle is
    ``c.sigma``."""
    return normalize_and_gauge(
        orbit_embed_amplitudes(c.sigma, c.theta1, c.phi1, c.theta2, c.phi2, c.tau)
    )


def orbit_metric(c: OrbitCoords) -> MetricMatrix:
    """Intrinsic metric of the five-dimensional orbit at ``c``.

    Coefficient matrix in the coordinate order ``(theta1, phi1, theta2,
    phi2, tau)``.  As ``sigma -> 0`` the matrix tends to the product metric
    of two round spheres of radius one half, with the ``tau`` direction
    degenerating.
    """
    s2 = np.sin(2 * c.sigma)
    ct = np.cos(c.tau)
    st = np.sin(c.tau)
    s1, s2_ = np.sin(c.theta1), np.sin(c.theta2)
    c1, c2_ = np.cos(c.theta1), np.cos(c.theta2)
    TH1, PH1, TH2, PH2, TAU = range(5)
    g = np.zeros((5, 5))
    g[TH1, TH1] = 1.0
    g[TH2, TH2] = 1.0
    g[PH1, PH1] = s1 * s1 + s2 * s2 * c1 * c1
    g[PH2, PH2] = s2_ * s2_ + s2 * s2 * c2_ * c2_
    g[TAU, TAU] = s2 * s2
    g[TH1, TH2] = g[TH2, TH1] = -s2 * ct
    g[PH1, PH2] = g[PH2, PH1] = s2 * ct * s1 * s2_ + s2 * s2 * c1 * c2_
    g[TH1, PH2] = g[PH2, TH1] = -s2 * st * s2_
    g[TH2, PH1] = g[PH1, TH2] = -s2 * st * s1
    g[TAU, PH1] = g[PH1, TAU] = s2 * s2 * c1
    g[TAU, PH2] = g[PH2, TAU] = s2 * s2 * c2_
    return MetricMatrix(ORBIT_COORD_NAMES, g / 4.0)


def orbit_density(c: OrbitCoords) -> float:
    """Volume density ``sqrt(det g)`` of the orbit metric at ``c``."""
    return float(
        (1.0 / 32.0)
        * np.cos(2 * c.sigma) ** 2
        * np.sin(2 * c.sigma)
        * np.sin(c.theta1)
        * np.sin(c.theta2)
    )


def orbit_volume(sigma: float) -> float:
    """Total volume ``pi^3 cos^2(2 sigma) sin(2 sigma)`` of the orbit."""
    if not 0.0 <= sigma <= np.pi / 4:
        raise OutOfRange("sigma must lie in [0, pi/4]")
    return float(np.pi**3 * np.cos(2 * sigma) ** 2 * np.sin(2 * sigma))


def schmidt_pdf(sigma: float) -> float:
    """Density of the Schmidt angle under the unitarily invariant measure.

    The orbit volume divided by the total volume ``pi^3 / 6`` of the state
    space: ``6 cos^2(2 sigma) sin(2 sigma)``.
    """
    return orbit_volume(sigma) * 6.0 / np.pi**3


def schmidt_cdf(sigma: float) -> float:
    """Closed-form distribution function ``1 - cos^3(2 sigma)``."""
    if not 0.0 <= sigma <= np.pi / 4:
        raise OutOfRange("sigma must lie in [0, pi/4]")
    return float(1.0 - np.cos(2 * sigma) ** 3)


def extrinsic_curvature_trace(sigma: float) -> float:
    """Trace of the extrinsic curvature of the constant-``sigma`` orbit.

    ``K = 4 (cos^2(2s) - 2 sin^2(2s)) / (cos(2s) sin(2s))``; the value is
    the same at every point of the orbit (the foliation has constant mean
    curvature) and vanishes where the orbit volume is maximal,
    ``tan(2s) = 1/sqrt(2)``.
    """
    if not 0.0 < sigma < np.pi / 4:
        raise OutOfRange("curvature defined for 0 < sigma < pi/4")
    c, s = np.cos(2 * sigma), np.sin(2 * sigma)
    return float(4.0 * (c * c - 2.0 * s * s) / (c * s))


def orbit_embed_u3(sigma: float, u1: np.ndarray, u3: np.ndarray) -> ProjectiveState:
    """Orbit point from the conjugation chart ``C = u1 CS u1^-1 u3``.

    At ``sigma = pi/4`` the Schmidt diagonal is proportional to the
    identity, the conjugation drops out and the state depends on ``u3``
    alone: the orbit collapses onto the group manifold SU(2) mod its center.
    """
    if not 0.0 < sigma <= np.pi / 4:
        raise OutOfRange("sigma must lie in (0, pi/4]")
    u1 = np.asarray(u1, dtype=complex)
    u3 = np.asarray(u3, dtype=complex)
    for name, u in (("u1", u1), ("u3", u3)):
        if u.shape != (2, 2) or abs(np.linalg.det(u) - 1.0) > 1e-10:
            raise OutOfRange(f"{name} must be special unitary")
    cs = np.diag([np.cos(sigma), np.sin(sigma)]).astype(complex)
    c = u1 @ cs @ np.linalg.inv(u1) @ u3
    return normalize_and_gauge(c.reshape(-1))


def euler_su2(a: float, b: float, c: float) -> np.ndarray:
    """SU(2) element with z-y-z Euler angles ``(a, b, c)``."""
    return _rz(a) @ _ry(-b) @ _rz(c)
