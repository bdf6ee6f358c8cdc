import numpy as np
import pytest
from scipy.optimize import brentq, minimize_scalar

from cpgeom import (
    InvalidRadius,
    InvalidSigma,
    PhaseRelation,
    Spin1Seed,
    collinearity_residual,
    constant_sigma_region,
    distance_sphere,
    fibonacci_sphere,
    fs_distance,
    gnomonic_project,
    is_max_entangled,
    is_separable,
    max_entangled_coordinate_residuals,
    max_entangled_set,
    mub_bases,
    normalize_and_gauge,
    numeric_pullback,
    schmidt_decompose,
    separable_surface,
    separability_coordinate_residuals,
    spin1_orbit,
    spin1_state,
    to_octant_torus,
    torus_shape,
)
from cpgeom.submanifolds import (
    EulerOctantCoords,
    constant_sigma_fiber_value,
    spin1_amplitudes,
)


class TestSeparableSurface:
    def test_samples_are_separable(self):
        rng = np.random.default_rng(0)
        for sample in separable_surface((7, 7)):
            free = rng.uniform(0, 2 * np.pi, 2)
            s = sample.state(free)
            z = s.amplitudes
            assert abs(z[0] * z[3] - z[1] * z[2]) < 1e-12
            assert is_separable(s)

    def test_octant_slices_are_ruled_by_geodesics(self):
        for theta in np.linspace(0.3, np.pi - 0.3, 5):
            pts = [
                EulerOctantCoords(tau, 0.0, theta).radii()
                for tau in np.linspace(0.1, np.pi - 0.1, 15)
            ]
            chart = np.array([gnomonic_project(p).coords for p in pts])
            assert collinearity_residual(chart) < 1e-9

    def test_intrinsic_metric_is_flat_quarter(self):
        def emb(x):
            return np.asarray(EulerOctantCoords(x[0], 0.0, x[1]).radii(), dtype=complex)

        rng = np.random.default_rng(1)
        for _ in range(20):
            point = rng.uniform(0.2, np.pi - 0.2, 2)
            g = numeric_pullback(emb, point)
            np.testing.assert_allclose(g.entries, np.eye(2) / 4, atol=1e-7)

    def test_euler_phi_zero_matches_separability(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            tau, theta = rng.uniform(0.1, np.pi - 0.1, 2)
            n = EulerOctantCoords(tau, 0.0, theta).radii()
            assert abs(n[0] * n[3] - n[1] * n[2]) < 1e-14


class TestMaxEntangledSet:
    def test_passes_through_center(self):
        best = min(
            np.linalg.norm(np.asarray(s.octant) - 0.5) for s in max_entangled_set(101)
        )
        assert best < 1e-12

    def test_samples_are_max_entangled(self):
        rng = np.random.default_rng(3)
        for sample in max_entangled_set(21):
            s = sample.state(rng.uniform(0, 2 * np.pi, 2))
            assert is_max_entangled(s, 1e-10)

    def test_bell_states_in_set(self):
        ends = max_entangled_set(3)
        bell_phi = normalize_and_gauge([1, 0, 0, -1])  # fiber point over t = 0
        s0 = ends[0].state()
        assert fs_distance(s0, bell_phi) < 1e-12
        bell_psi = normalize_and_gauge([0, 1, -1, 0])
        s1 = ends[-1].state([0.0, np.pi])  # nu1 = 0, nu2 = pi on the far edge
        assert fs_distance(s1, bell_psi) < 1e-12

    def test_fiber_relations_differ_by_pi(self):
        sep = separable_surface((3, 3))[0].fiber
        ent = max_entangled_set(3)[0].fiber
        assert sep.coeffs == ent.coeffs
        assert abs((ent.offset - sep.offset) % (2 * np.pi) - np.pi) < 1e-14

    def test_distance_to_separable_surface(self):
        rng = np.random.default_rng(4)
        ent = [s.state(rng.uniform(0, 2 * np.pi, 2)) for s in max_entangled_set(9)]
        sep = [s.state(rng.uniform(0, 2 * np.pi, 2)) for s in separable_surface((9, 9))]
        dmin = min(fs_distance(a, b) for a in ent for b in sep)
        assert dmin >= np.pi / 4 - 1e-9

    def test_crossing_at_fiber_volume_argmax(self):
        def radii(t):
            c, s = np.cos(t) / np.sqrt(2), np.sin(t) / np.sqrt(2)
            return np.array([c, s, s, c])

        t_cross = brentq(lambda t: radii(t)[0] * radii(t)[3] - radii(t)[1] * radii(t)[2],
                         0.1, np.pi / 2 - 0.1, xtol=1e-12)
        t_max = minimize_scalar(
            lambda t: -torus_shape(radii(t)).area_or_volume,
            bounds=(0.01, np.pi / 2 - 0.01),
            method="bounded",
            options={"xatol": 1e-10},
        ).x
        assert np.linalg.norm(radii(t_cross) - radii(t_max)) < 1e-6


class TestConstantSigmaRegion:
    def test_invalid_sigma(self):
        for bad in (0.0, np.pi / 4, 1.0):
            with pytest.raises(InvalidSigma):
                constant_sigma_region(bad, 5)

    def test_samples_have_requested_schmidt_angle(self):
        rng = np.random.default_rng(5)
        sigma = np.pi / 8
        region = constant_sigma_region(sigma, 9)
        assert len(region) > 50
        for sample in region[:: max(1, len(region) // 40)]:
            s = sample.state(rng.uniform(0, 2 * np.pi, 2))
            assert abs(schmidt_decompose(s).schmidt_angle - sigma) < 1e-9

    def test_small_sigma_hugs_separable_surface(self):
        sep = np.array([s.octant for s in separable_surface((40, 40))])
        for sigma, bound in ((0.05, 0.12), (0.012, 0.05)):
            region = np.array([s.octant for s in constant_sigma_region(sigma, 12)])
            gaps = np.sqrt(
                ((region[:, None, :] - sep[None, :, :]) ** 2).sum(-1)
            ).min(axis=1)
            assert gaps.max() < bound

    def test_near_maximal_sigma_is_tube_around_line(self):
        line = np.array([s.octant for s in max_entangled_set(400)])
        region = np.array([s.octant for s in constant_sigma_region(np.pi / 4 - 0.1, 24)])
        assert len(region) > 20
        gaps = np.sqrt(((region[:, None, :] - line[None, :, :]) ** 2).sum(-1)).min(axis=1)
        assert gaps.max() < 0.1

    def test_boundary_fiber_degenerates(self):
        # on the region boundary the allowed phase circle shrinks to a point
        sigma = np.pi / 8
        cs = np.cos(sigma) * np.sin(sigma)
        rng = np.random.default_rng(6)
        found = 0
        while found < 20:
            a, b = rng.uniform(0.2, 0.7, 2)
            # choose n with n0*n3 - n1*n2 = +cs exactly: boundary of the region
            n0, n3 = a, b
            prod = n0 * n3 - cs
            if prod <= 0.001:
                continue
            n1 = np.sqrt(prod * 0.9)
            n2 = prod / n1
            n = np.array([n0, n1, n2, n3])
            n /= np.linalg.norm(n)
            # rescaling preserves the defining ratio only approximately; renormalize exactly
            scale2 = 1.0 / (n0**2 + n1**2 + n2**2 + n3**2)
            val = constant_sigma_fiber_value(tuple(n), sigma)
            if abs(abs(val) - 1.0) > 0.2:
                continue
            found += 1
        assert found == 20

    def test_region_membership_inequality(self):
        sigma = 0.3
        cs2 = (np.cos(sigma) * np.sin(sigma)) ** 2
        for sample in constant_sigma_region(sigma, 8):
            n0, n1, n2, n3 = sample.octant
            assert (n0 * n3 - n1 * n2) ** 2 <= cs2 + 1e-12
            assert cs2 <= (n0 * n3 + n1 * n2) ** 2 + 1e-12


class TestDistanceSphere:
    def test_invalid_radius(self):
        with pytest.raises(InvalidRadius):
            distance_sphere(0, 0.0, 5)
        with pytest.raises(InvalidRadius):
            distance_sphere(0, 2.0, 5)

    def test_max_radius_is_opposite_edge(self):
        for sample in distance_sphere(0, np.pi / 2, 9):
            assert sample.octant[0] < 1e-12

    def test_constant_distance(self):
        rng = np.random.default_rng(7)
        corner_state = normalize_and_gauge([1, 0, 0])
        d = 0.6
        for sample in distance_sphere(0, d, 15):
            phases = rng.uniform(0, 2 * np.pi, 2)
            s = sample.state(phases)
            assert abs(fs_distance(s, corner_state) - d) < 1e-10

    def test_cp3_patch(self):
        corner_state = normalize_and_gauge([0, 1, 0, 0])
        d = 1.1
        samples = distance_sphere(1, d, 6, dim=4)
        assert len(samples) == 36
        for sample in samples[::5]:
            s = sample.state()
            assert abs(fs_distance(s, corner_state) - d) < 1e-10


class TestSpin1:
    def test_antipodal_spin_zero_identified(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            n = rng.standard_normal(3)
            n /= np.linalg.norm(n)
            a = spin1_state(Spin1Seed.SPIN_ZERO, n)
            b = spin1_state(Spin1Seed.SPIN_ZERO, -n)
            # identification is exact: both directions give the same gauge
            # representative (arccos cannot resolve distances below ~1e-8)
            np.testing.assert_allclose(a.amplitudes, b.amplitudes, atol=1e-12)
            assert fs_distance(a, b) < 1e-7

    def test_spin_up_z_is_corner(self):
        s = spin1_state(Spin1Seed.SPIN_UP, [0, 0, 1])
        np.testing.assert_allclose(s.amplitudes, [1, 0, 0], atol=1e-14)

    def test_spin_up_distance_law(self):
        dirs = fibonacci_sphere(24)
        states = spin1_orbit(Spin1Seed.SPIN_UP, dirs)
        for i in range(len(dirs)):
            for j in range(i + 1, len(dirs)):
                gamma = np.arccos(np.clip(dirs[i] @ dirs[j], -1, 1))
                expected = np.arccos(np.cos(gamma / 2) ** 2)
                assert abs(fs_distance(states[i], states[j]) - expected) < 1e-8

    def test_spin_up_round_metric_radius(self):
        # induced metric is (1/2)(dtheta^2 + sin^2 theta dphi^2)
        def emb(x):
            theta, phi = x
            n = [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
            return spin1_amplitudes(Spin1Seed.SPIN_UP, n)

        rng = np.random.default_rng(9)
        for _ in range(15):
            theta = rng.uniform(0.3, np.pi - 0.3)
            phi = rng.uniform(0, 2 * np.pi)
            g = numeric_pullback(emb, [theta, phi])
            expected = 0.5 * np.diag([1.0, np.sin(theta) ** 2])
            np.testing.assert_allclose(g.entries, expected, atol=1e-8)

    def test_spin_zero_orbit_over_octant(self):
        # the orbit covers a one-parameter family of circles: m=0 radii stay
        # on the octant curve (sin(t)/sqrt2, cos t, sin(t)/sqrt2)
        for theta in np.linspace(0.1, np.pi / 2, 8):
            n = [np.sin(theta), 0.0, np.cos(theta)]
            c = to_octant_torus(spin1_state(Spin1Seed.SPIN_ZERO, n))
            r = np.abs(np.array([np.sin(theta) / np.sqrt(2), np.cos(theta), np.sin(theta) / np.sqrt(2)]))
            np.testing.assert_allclose(c.radii, r, atol=1e-12)


class TestMub:
    def test_within_basis_orthonormal(self):
        for b in mub_bases():
            np.testing.assert_allclose(b.conj().T @ b, np.eye(3), atol=1e-12)

    def test_cross_overlaps(self):
        bases = mub_bases()
        target = 1 / np.sqrt(3)
        pairs = 0
        for a in range(4):
            for b in range(a + 1, 4):
                g = np.abs(bases[a].conj().T @ bases[b])
                np.testing.assert_allclose(g, target * np.ones((3, 3)), atol=1e-12)
                pairs += 9
        assert pairs == 54

    def test_nonstandard_vectors_over_center(self):
        for b in mub_bases()[1:]:
            for k in range(3):
                c = to_octant_torus(normalize_and_gauge(b[:, k]))
                np.testing.assert_allclose(c.radii, np.ones(3) / np.sqrt(3), atol=1e-12)


def test_membership_residuals_of_generators():
    rng = np.random.default_rng(10)
    for sample in separable_surface((6, 6)):
        s = sample.state(rng.uniform(0, 2 * np.pi, 2))
        c = to_octant_torus(s)
        r_n, r_nu = separability_coordinate_residuals(c)
        assert abs(r_n) < 1e-10
        if r_nu is not None:
            assert abs(r_nu) < 1e-10
    for sample in max_entangled_set(9):
        s = sample.state(rng.uniform(0, 2 * np.pi, 2))
        r1, r2, r3 = max_entangled_coordinate_residuals(to_octant_torus(s))
        assert abs(r1) < 1e-10 and abs(r2) < 1e-10
        if r3 is not None:
            assert abs(r3) < 1e-10
