"""Named verification checks over every module, grouped into suites.

Each check measures one residual or statistic against a pinned tolerance;
the CLI ``check`` command and the acceptance test suite both run these.
Checks are deterministic functions of the seed.  A few accept an override
of the quantity under test so the suite can prove it would catch an
injected error (the mutation checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize, minimize_scalar

from . import charts, entanglement, orbits, sampling, simplex, submanifolds, symplectic
from .orbits import ORBIT_COORD_NAMES, OrbitCoords, orbit_embed_amplitudes
from .states import (
    MetricMatrix,
    OctantTorusCoords,
    fs_distance,
    normalize_and_gauge,
    octant_torus_metric,
    to_octant_torus,
    wrap_angle,
)

SUITES = ("metric", "entanglement", "orbits", "symplectic", "sampling")


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    value: float
    tolerance: float
    passed: bool
    detail: str = ""


def _result(name, suite, value, tolerance, detail="", flip=False):
    ok = value <= tolerance
    if flip:
        ok = not ok
    return CheckResult(name, suite, float(value), float(tolerance), bool(ok), detail)


def _random_interior_coords(rng, dim, margin=0.15):
    while True:
        r = np.abs(rng.standard_normal(dim))
        r /= np.linalg.norm(r)
        if r.min() > margin:
            break
    return OctantTorusCoords(tuple(r), tuple(rng.uniform(0, 2 * np.pi, dim - 1)))


def _random_orbit_coords(rng):
    return OrbitCoords(
        sigma=rng.uniform(0.05, np.pi / 4 - 0.05),
        theta1=rng.uniform(0.2, np.pi - 0.2),
        phi1=rng.uniform(0, 2 * np.pi),
        theta2=rng.uniform(0.2, np.pi - 0.2),
        phi2=rng.uniform(0, 2 * np.pi),
        tau=rng.uniform(0, 2 * np.pi),
    )


def _octant_embedding(dim):
    def emb(x):
        k = dim - 1
        n = x[:k]
        nu = x[k:]
        n0 = np.sqrt(1.0 - np.sum(n * n))
        return np.concatenate([[n0 + 0j], n * np.exp(1j * nu)])

    return emb


# ---------------------------------------------------------------- metric ---


def check_max_distance(rng):
    worst = 0.0
    for dim in (3, 4):
        eye = np.eye(dim)
        for i in range(dim):
            for j in range(i + 1, dim):
                a = normalize_and_gauge(eye[i])
                b = normalize_and_gauge(eye[j])
                worst = max(worst, abs(fs_distance(a, b) - np.pi / 2))
        for _ in range(20):
            g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            u, _ = np.linalg.qr(g)
            a = normalize_and_gauge(u[:, 0])
            b = normalize_and_gauge(u[:, 1])
            worst = max(worst, abs(fs_distance(a, b) - np.pi / 2))
    return _result(
        "fs-max-distance", "metric", worst, 1e-12, "orthogonal pairs vs pi/2"
    )


def check_octant_metric_pullback(rng):
    worst = 0.0
    for dim in (3, 4):
        emb = _octant_embedding(dim)
        for _ in range(50):
            c = _random_interior_coords(rng, dim)
            x = np.concatenate([c.radii[1:], c.phases])
            g = octant_torus_metric(c).entries
            num = charts.numeric_pullback(emb, x).entries
            worst = max(worst, float(np.max(np.abs(g - num))))
    return _result(
        "octant-metric-pullback",
        "metric",
        worst,
        1e-7,
        "coordinate metric vs finite-difference pullback, 100 points",
    )


def check_gnomonic_straightness(rng):
    worst = 0.0
    for dim in (3, 4):
        for _ in range(20):
            a = np.abs(rng.standard_normal(dim))
            b = np.abs(rng.standard_normal(dim))
            arc = charts.trace_great_circle(a, b, 33)
            img = np.array([charts.gnomonic_project(p).coords for p in arc.points])
            worst = max(worst, charts.collinearity_residual(img))
    return _result(
        "gnomonic-straightness", "metric", worst, 1e-9, "great circles map to lines"
    )


def check_gnomonic_corner_separation(rng):
    worst = 0.0
    for dim in (3, 4):
        corners = [np.asarray(charts.gnomonic_project(np.eye(dim)[i]).coords) for i in range(dim)]
        for i in range(dim):
            for j in range(i + 1, dim):
                worst = max(worst, abs(np.linalg.norm(corners[i] - corners[j]) - 1.0))
    return _result(
        "gnomonic-corner-separation", "metric", worst, 1e-12, "unit corner distances"
    )


def check_torus_area_law(rng):
    worst = 0.0
    for _ in range(100):
        n = np.abs(rng.standard_normal(3))
        n /= np.linalg.norm(n)
        s = charts.torus_shape(n)
        lhs = s.side_lengths[0] * s.side_lengths[1] * np.sin(s.pairwise_angles[(1, 2)])
        worst = max(worst, abs(lhs - s.area_or_volume))
    return _result("torus-area-law", "metric", worst, 1e-10, "A = L1 L2 sin(theta12)")


def check_torus_argmax_center(rng):
    def neg_area(x):
        theta, psi = x
        n = np.array(
            [np.sin(theta) * np.cos(psi), np.sin(theta) * np.sin(psi), np.cos(theta)]
        )
        return -charts.torus_shape(n).area_or_volume

    best = None
    for start in ([0.9, 0.7], [1.2, 0.4], [0.6, 1.0]):
        res = minimize(neg_area, start, method="Nelder-Mead",
                       options={"xatol": 1e-12, "fatol": 1e-15})
        if best is None or res.fun < best.fun:
            best = res
    theta, psi = best.x
    n = np.array([np.sin(theta) * np.cos(psi), np.sin(theta) * np.sin(psi), np.cos(theta)])
    off = float(np.linalg.norm(n - 1 / np.sqrt(3)))
    return _result(
        "torus-argmax-center", "metric", off, 1e-6, "largest torus sits at the center"
    )


def check_mub(rng):
    bases = submanifolds.mub_bases()
    target = 1 / np.sqrt(3)
    worst = 0.0
    for a in range(4):
        for b in range(a + 1, 4):
            g = np.abs(bases[a].conj().T @ bases[b])
            worst = max(worst, float(np.max(np.abs(g - target))))
    for basis in bases[1:]:
        for k in range(3):
            c = to_octant_torus(normalize_and_gauge(basis[:, k]))
            worst = max(worst, float(np.max(np.abs(np.asarray(c.radii) - target))))
    return _result(
        "mub-overlaps", "metric", worst, 1e-12, "cross overlaps 1/sqrt(3), vectors over center"
    )


def check_spin1_sphere(rng):
    def emb(x):
        theta, phi = x
        n = [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
        return submanifolds.spin1_amplitudes(submanifolds.Spin1Seed.SPIN_UP, n)

    worst = 0.0
    for _ in range(10):
        theta = rng.uniform(0.3, np.pi - 0.3)
        phi = rng.uniform(0, 2 * np.pi)
        g = charts.numeric_pullback(emb, [theta, phi]).entries
        expected = 0.5 * np.diag([1.0, np.sin(theta) ** 2])
        worst = max(worst, float(np.max(np.abs(g - expected))))
    dirs = charts.fibonacci_sphere(16)
    states = submanifolds.spin1_orbit(submanifolds.Spin1Seed.SPIN_UP, dirs)
    for i in range(len(dirs)):
        for j in range(i + 1, len(dirs)):
            gamma = np.arccos(np.clip(dirs[i] @ dirs[j], -1, 1))
            expected = np.arccos(np.cos(gamma / 2) ** 2)
            worst = max(worst, abs(fs_distance(states[i], states[j]) - expected))
    return _result(
        "spin1-sphere-radius", "metric", worst, 1e-8, "round metric of radius 1/sqrt(2)"
    )


def check_spin1_antipodal(rng):
    worst = 0.0
    for _ in range(20):
        n = rng.standard_normal(3)
        n /= np.linalg.norm(n)
        a = submanifolds.spin1_state(submanifolds.Spin1Seed.SPIN_ZERO, n)
        b = submanifolds.spin1_state(submanifolds.Spin1Seed.SPIN_ZERO, -n)
        worst = max(worst, float(np.max(np.abs(a.amplitudes - b.amplitudes))))
    return _result(
        "spin1-antipodal-identification",
        "metric",
        worst,
        1e-12,
        "opposite directions give the same projective point",
    )


# ---------------------------------------------------------- entanglement ---


def _grid_states(samples, rng, fiber_grid):
    states = []
    for s in samples:
        for f1 in np.linspace(0, 2 * np.pi, fiber_grid, endpoint=False):
            for f2 in np.linspace(0, 2 * np.pi, fiber_grid, endpoint=False):
                states.append(s.state([f1, f2]).amplitudes)
    return np.array(states)


def check_separable_maxent_gap(rng):
    worst = 0.0
    detail = []
    for base, fiber in ((7, 4), (11, 6)):
        ent = _grid_states(submanifolds.max_entangled_set(base), rng, fiber)
        sep = _grid_states(submanifolds.separable_surface((base, base)), rng, fiber)
        overlaps = np.abs(ent @ sep.conj().T)
        dmin = float(np.arccos(np.clip(overlaps.max(), 0, 1)))
        if dmin < np.pi / 4 - 1e-9:
            return _result(
                "separable-maxent-gap", "entanglement", np.pi / 4 - dmin, 1e-9,
                "grid minimum fell below the analytic bound",
            )
        worst = max(worst, abs(dmin - np.pi / 4))
        detail.append(f"{dmin:.6f}")
    return _result(
        "separable-maxent-gap", "entanglement", worst, 1e-3,
        "grid minima at two refinements: " + ", ".join(detail),
    )


def _best_product_overlap(z, rng, restarts=3):
    def cost(x):
        a = np.array([np.cos(x[0] / 2), np.exp(1j * x[1]) * np.sin(x[0] / 2)])
        b = np.array([np.cos(x[2] / 2), np.exp(1j * x[3]) * np.sin(x[2] / 2)])
        return -abs(np.vdot(np.outer(a, b).reshape(-1), z))

    best = 0.0
    for _ in range(restarts):
        x0 = rng.uniform(0, np.pi, 4) * np.array([1, 2, 1, 2])
        res = minimize(cost, x0, method="Nelder-Mead", options={"xatol": 1e-9, "fatol": 1e-12})
        best = max(best, -res.fun)
    return best


def check_closest_separable(rng):
    worst_eq = 0.0
    worst_beat = 0.0
    for _ in range(200):
        s = normalize_and_gauge(rng.standard_normal(4) + 1j * rng.standard_normal(4))
        nearest, dist, _ = entanglement.closest_separable(s)
        sigma = entanglement.schmidt_decompose(s).schmidt_angle
        worst_eq = max(worst_eq, abs(dist - sigma))
        d_direct = fs_distance(nearest, s)
        worst_eq = max(worst_eq, abs(d_direct - dist))
        search = np.arccos(min(_best_product_overlap(s.amplitudes, rng), 1.0))
        worst_beat = max(worst_beat, dist - search)
    value = max(worst_eq, worst_beat)
    return _result(
        "closest-separable-optimality", "entanglement", value, 1e-8,
        "distance equals the Schmidt angle; search never improves on it",
    )


# ----------------------------------------------------------------- orbits ---


def orbit_metric_pullback_residual(rng, count=50, metric_fn=None):
    metric_fn = metric_fn or orbits.orbit_metric
    worst = 0.0
    for _ in range(count):
        c = _random_orbit_coords(rng)

        def emb(x, sigma=c.sigma):
            return orbit_embed_amplitudes(sigma, x[0], x[1], x[2], x[3], x[4])

        num = charts.numeric_pullback(emb, [c.theta1, c.phi1, c.theta2, c.phi2, c.tau])
        worst = max(worst, float(np.max(np.abs(metric_fn(c).entries - num.entries))))
    return worst


def check_orbit_metric(rng, metric_fn=None):
    worst = orbit_metric_pullback_residual(rng, 50, metric_fn)
    # the normal direction splits off with unit coefficient
    for _ in range(10):
        c = _random_orbit_coords(rng)

        def emb6(x):
            return orbit_embed_amplitudes(*x)

        num = charts.numeric_pullback(
            emb6, [c.sigma, c.theta1, c.phi1, c.theta2, c.phi2, c.tau]
        ).entries
        worst = max(worst, 10 * abs(num[0, 0] - 1.0), 10 * float(np.max(np.abs(num[0, 1:]))))
    return _result(
        "orbit-metric-pullback", "orbits", worst, 1e-6,
        "intrinsic metric vs embedding pullback, sigma block split",
    )


def check_orbit_volume_integral(rng):
    total, _ = quad(orbits.orbit_volume, 0, np.pi / 4, epsabs=1e-13)
    return _result(
        "orbit-volume-integral", "orbits", abs(total - np.pi**3 / 6), 1e-10,
        "orbit volumes integrate to the volume of the state space",
    )


def check_orbit_density_determinant(rng):
    worst = 0.0
    for _ in range(100):
        c = _random_orbit_coords(rng)
        det = np.linalg.det(orbits.orbit_metric(c).entries)
        d = orbits.orbit_density(c)
        worst = max(worst, abs(d * d - det) / max(det, 1e-30))
    return _result(
        "orbit-density-determinant", "orbits", worst, 1e-8,
        "density squared equals the metric determinant",
    )


def check_curvature_values(rng):
    sigma_star = 0.5 * np.arctan(1 / np.sqrt(2))
    v1 = abs(orbits.extrinsic_curvature_trace(sigma_star))
    v2 = abs(orbits.extrinsic_curvature_trace(np.pi / 8) + 4.0)
    # the zero must sit at the maximal-volume angle: bracketing sign change
    if not (
        orbits.extrinsic_curvature_trace(sigma_star - 1e-6) > 0
        > orbits.extrinsic_curvature_trace(sigma_star + 1e-6)
    ):
        return _result(
            "curvature-values", "orbits", 1.0, 1e-12,
            "curvature does not change sign at the maximal-volume angle",
        )
    return _result(
        "curvature-values", "orbits", max(v1, v2), 1e-12,
        "zero at tan(2s) = 1/sqrt(2); value -4 at s = pi/8",
    )


def _numeric_mean_curvature(c, h=1e-3):
    # independent witness: K = 2 d/dsigma ln sqrt(det pullback metric)
    def log_sqrt_det(sigma):
        def emb(x):
            return orbit_embed_amplitudes(sigma, x[0], x[1], x[2], x[3], x[4])

        g = charts.numeric_pullback(emb, [c.theta1, c.phi1, c.theta2, c.phi2, c.tau])
        return 0.5 * np.log(np.linalg.det(g.entries))

    return (log_sqrt_det(c.sigma + h) - log_sqrt_det(c.sigma - h)) / h


def check_cmc_foliation(rng):
    worst = 0.0
    for sigma in (0.3, 0.55):
        estimates = []
        for _ in range(5):
            c = _random_orbit_coords(rng)
            c = OrbitCoords(sigma, c.theta1, c.phi1, c.theta2, c.phi2, c.tau)
            estimates.append(_numeric_mean_curvature(c))
        spread = max(estimates) - min(estimates)
        bias = abs(np.mean(estimates) - orbits.extrinsic_curvature_trace(sigma))
        worst = max(worst, spread, bias)
    return _result(
        "cmc-foliation", "orbits", worst, 1e-3,
        "numerical mean curvature constant on each orbit and matching the closed form",
    )


def check_mutation_orbit_metric(rng):
    def mutated(c):
        g = orbits.orbit_metric(c).entries.copy()
        for i, j in ((0, 2), (0, 3), (2, 1), (1, 3)):
            g[i, j] = -g[i, j]
            g[j, i] = -g[j, i]
        return MetricMatrix(ORBIT_COORD_NAMES, g)

    residual = orbit_metric_pullback_residual(rng, 10, mutated)
    return _result(
        "mutation-orbit-metric", "orbits", residual, 1e-5,
        "sign error in the metric cross terms must be caught",
        flip=True,
    )


# -------------------------------------------------------------- symplectic ---


def omega_orbit_consistency_residual(rng, count=10, form_fn=None):
    form_fn = form_fn or symplectic.omega_orbit
    h = 1e-6
    worst = 0.0
    done = 0
    while done < count:
        c = _random_orbit_coords(rng)
        x0 = np.array([c.sigma, c.tau, c.theta1, c.phi1, c.theta2, c.phi2])

        def oct_coords(x):
            z = orbit_embed_amplitudes(x[0], x[2], x[3], x[4], x[5], x[1])
            return to_octant_torus(normalize_and_gauge(z))

        base = oct_coords(x0)
        if not base.is_interior(1e-3):
            continue
        jac = np.zeros((6, 6))
        ok = True
        for i in range(6):
            e = np.zeros(6)
            e[i] = h
            cp, cm = oct_coords(x0 + e), oct_coords(x0 - e)
            if not (cp.is_interior(1e-4) and cm.is_interior(1e-4)):
                ok = False
                break
            dn = (np.asarray(cp.radii[1:]) - np.asarray(cm.radii[1:])) / (2 * h)
            dnu = [wrap_angle(cp.phases[k] - cm.phases[k]) / (2 * h) for k in range(3)]
            jac[:, i] = np.concatenate([dn, dnu])
        if not ok:
            continue
        pulled = jac.T @ symplectic.omega_octant(base).entries @ jac
        worst = max(worst, float(np.max(np.abs(pulled - form_fn(c).entries))))
        done += 1
    return worst


def check_omega_consistency(rng, form_fn=None):
    worst = omega_orbit_consistency_residual(rng, 10, form_fn)
    return _result(
        "omega-orbit-octant-consistency", "symplectic", worst, 1e-7,
        "orbit-coordinate form equals the octant form under the chart change",
    )


def check_lagrangian_max_entangled(rng):
    grid = [rng.uniform(0.2, 6.0, 3) for _ in range(12)]
    worst = symplectic.lagrangian_residual(submanifolds.max_entangled_amplitudes, grid)
    return _result(
        "lagrangian-max-entangled", "symplectic", worst, 1e-8,
        "2-form pulls back to zero on the maximally entangled set",
    )


def check_closedness(rng):
    def octant_field(x):
        m = np.zeros((6, 6))
        for i in range(3):
            m[i, 3 + i] = 4.0 * x[i]
            m[3 + i, i] = -4.0 * x[i]
        return m

    def orbit_field(x):
        return symplectic.omega_orbit(OrbitCoords(x[0], x[2], x[3], x[4], x[5], x[1])).entries

    worst = 0.0
    for _ in range(5):
        c = _random_interior_coords(rng, 4)
        worst = max(
            worst,
            symplectic.closedness_residual(octant_field, np.concatenate([c.radii[1:], c.phases])),
        )
        o = _random_orbit_coords(rng)
        worst = max(
            worst,
            symplectic.closedness_residual(
                orbit_field, [o.sigma, o.tau, o.theta1, o.phi1, o.theta2, o.phi2]
            ),
        )
    return _result(
        "closedness", "symplectic", worst, 1e-6, "exterior derivative of both forms vanishes"
    )


def check_omega_rank(rng):
    worst_null = 0.0
    for _ in range(10):
        c = _random_orbit_coords(rng)
        m = symplectic.omega_orbit(c).entries[1:, 1:]
        sv = np.linalg.svd(m, compute_uv=False)
        if np.sum(sv > 1e-6) != 4:
            return _result(
                "omega-constant-sigma-rank", "symplectic", float(np.sum(sv > 1e-6)), 4,
                "restricted form does not have rank four",
            )
        worst_null = max(worst_null, float(sv[-1]))
    return _result(
        "omega-constant-sigma-rank", "symplectic", worst_null, 1e-10,
        "rank four with one exact null direction on each orbit",
    )


def check_liouville_density(rng):
    worst = 0.0
    for _ in range(20):
        c = _random_interior_coords(rng, 4)
        lv = symplectic.liouville_volume_density(c)
        sd = np.sqrt(np.linalg.det(octant_torus_metric(c).entries))
        worst = max(worst, abs(lv - sd))
        o = _random_orbit_coords(rng)
        worst = max(worst, abs(symplectic.liouville_volume_density(o) - orbits.orbit_density(o)))
    return _result(
        "liouville-metric-volume", "symplectic", worst, 1e-8,
        "wedge-power density equals the metric volume density",
    )


def check_liouville_total_volume(rng):
    # Monte Carlo integral of the Liouville density over the whole space
    n = 200_000
    pts = rng.uniform(0.0, 1.0, (n, 3))
    inside = (pts * pts).sum(axis=1) <= 1.0
    f = np.where(inside, pts[:, 0] * pts[:, 1] * pts[:, 2], 0.0)
    # guard: the vectorized integrand is the Liouville density itself
    for row in pts[inside][:20]:
        n0 = np.sqrt(1.0 - row @ row)
        if n0 > 1e-3 and row.min() > 1e-3:
            c = OctantTorusCoords((n0, *row), (0.1, 0.2, 0.3))
            if abs(symplectic.liouville_volume_density(c) - np.prod(row)) > 1e-12:
                return _result(
                    "liouville-total-volume", "symplectic", 1.0, 0.01,
                    "integrand disagrees with the Liouville density",
                )
    total = f.mean() * (2 * np.pi) ** 3
    rel = abs(total - np.pi**3 / 6) / (np.pi**3 / 6)
    return _result(
        "liouville-total-volume", "symplectic", rel, 0.01,
        "Monte Carlo volume of the state space within one percent",
    )


def check_mutation_omega_orbit(rng):
    def mutated(c):
        m = symplectic.omega_orbit(c).entries.copy()
        for i, j in ((2, 3), (4, 5)):
            m[i, j] = -m[i, j]
            m[j, i] = -m[j, i]
        return symplectic.TwoFormMatrix(symplectic.ORBIT_FORM_COORDS, m)

    residual = omega_orbit_consistency_residual(rng, 4, mutated)
    return _result(
        "mutation-omega-orbit", "symplectic", residual, 1e-6,
        "sign error in the orbit 2-form must be caught",
        flip=True,
    )


# ---------------------------------------------------------------- sampling ---


def check_sampling_sigma(rng):
    seed = int(rng.integers(2**32))
    batch = sampling.sample_batch(seed, 100_000)
    ks = sampling.ks_statistic(batch.sigmas, lambda s: 1 - np.cos(2 * s) ** 3)
    return _result(
        "sampling-sigma-ks", "sampling", ks, 0.01,
        f"Schmidt-angle distribution at n=1e5 (seed {seed})",
    )


def check_sampling_bloch(rng):
    seed = int(rng.integers(2**32))
    batch = sampling.sample_batch(seed, 100_000)
    ks = sampling.ks_statistic(batch.bloch_radii, lambda r: r**3)
    frac_dev = abs(float(np.mean(batch.bloch_radii < 0.5)) - 0.125)
    return _result(
        "sampling-bloch-radius", "sampling", max(ks, frac_dev), 0.01,
        "uniform Bloch-ball law: KS against r^3 and the r < 1/2 mass",
    )


def check_sampling_lu_invariance(rng):
    seed = int(rng.integers(2**32))
    n = 100_000
    base = sampling.batch_sigmas(seed, n)
    u1, u2 = sampling.random_su2(rng), sampling.random_su2(rng)
    z = np.vstack(
        [
            sampling._chunk_amplitudes(seed, k, min(sampling.CHUNK, n - k * sampling.CHUNK))
            for k in range((n + sampling.CHUNK - 1) // sampling.CHUNK)
        ]
    )
    cm = np.einsum("ij,njk,kl->nil", u1, z.reshape(n, 2, 2), u2.T)
    sv = np.linalg.svd(cm, compute_uv=False)
    rotated = np.arctan2(sv[:, 1], sv[:, 0])
    a, b = np.sort(base), np.sort(rotated)
    allv = np.concatenate([a, b])
    fa = np.searchsorted(a, allv, side="right") / n
    fb = np.searchsorted(b, allv, side="right") / n
    ks2 = float(np.max(np.abs(fa - fb)))
    return _result(
        "sampling-lu-invariance", "sampling", ks2, 0.015,
        "two-sample KS between raw and locally rotated Schmidt angles",
    )


def check_sampling_histogram(rng):
    seed = int(rng.integers(2**32))
    n = 100_000
    sig = sampling.batch_sigmas(seed, n)
    edges = np.linspace(0, np.pi / 4, 21)
    counts, _ = np.histogram(sig, bins=edges)
    probs = np.diff([orbits.schmidt_cdf(e) for e in edges])
    se = np.sqrt(n * probs * (1 - probs))
    pulls = np.abs(counts - n * probs) / se
    return _result(
        "sampling-histogram", "sampling", float(pulls.max()), 3.0,
        "per-bin agreement with the density within three standard errors",
    )


#: Registry as (suite, check) pairs; the index is part of the seed stream,
#: so a check sees the same randomness whether run alone or within "all".
CHECKS = (
    ("metric", check_max_distance),
    ("metric", check_octant_metric_pullback),
    ("metric", check_gnomonic_straightness),
    ("metric", check_gnomonic_corner_separation),
    ("metric", check_torus_area_law),
    ("metric", check_torus_argmax_center),
    ("metric", check_mub),
    ("metric", check_spin1_sphere),
    ("metric", check_spin1_antipodal),
    ("entanglement", check_separable_maxent_gap),
    ("entanglement", check_closest_separable),
    ("orbits", check_orbit_metric),
    ("orbits", check_orbit_volume_integral),
    ("orbits", check_orbit_density_determinant),
    ("orbits", check_curvature_values),
    ("orbits", check_cmc_foliation),
    ("orbits", check_mutation_orbit_metric),
    ("symplectic", check_omega_consistency),
    ("symplectic", check_lagrangian_max_entangled),
    ("symplectic", check_closedness),
    ("symplectic", check_omega_rank),
    ("symplectic", check_liouville_density),
    ("symplectic", check_liouville_total_volume),
    ("symplectic", check_mutation_omega_orbit),
    ("sampling", check_sampling_sigma),
    ("sampling", check_sampling_bloch),
    ("sampling", check_sampling_lu_invariance),
    ("sampling", check_sampling_histogram),
)


def run_checks(suite: str = "all", seed: int = 0):
    """Run one suite (or every suite) and return the list of results."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {('all',) + SUITES}")
    results = []
    for idx, (check_suite, fn) in enumerate(CHECKS):
        if suite not in ("all", check_suite):
            continue
        rng = np.random.default_rng([seed, idx])
        results.append(fn(rng))
    return results
