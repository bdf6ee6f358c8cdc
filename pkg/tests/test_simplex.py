import numpy as np
import pytest

from cpgeom import (
    DimensionMismatch,
    ZeroVector,
    collinearity_residual,
    fs_distance,
    gnomonic_project,
    mixing_line,
    round_distance,
    schmidt_simplex_check,
    schmidt_state,
    simplex_to_gnomonic,
    trace_great_circle,
)


class TestMixingLine:
    def test_endpoints(self):
        p, q = [0.7, 0.2, 0.1], [0.1, 0.3, 0.6]
        np.testing.assert_allclose(mixing_line(p, q, 0.0), p)
        np.testing.assert_allclose(mixing_line(p, q, 1.0), q)

    def test_midpoint_of_corners(self):
        np.testing.assert_allclose(
            mixing_line([1, 0, 0], [0, 1, 0], 0.5), [0.5, 0.5, 0.0]
        )

    def test_stays_in_simplex(self):
        p, q = [0.6, 0.3, 0.1], [0.05, 0.05, 0.9]
        for t in np.linspace(0, 1, 11):
            m = mixing_line(p, q, t)
            assert np.all(m >= 0) and abs(m.sum() - 1) < 1e-14

    def test_mixture_is_curved_in_round_chart(self):
        p, q = [0.7, 0.2, 0.1], [0.05, 0.15, 0.8]
        chart = np.array(
            [simplex_to_gnomonic(mixing_line(p, q, t)).coords for t in np.linspace(0, 1, 21)]
        )
        assert collinearity_residual(chart) > 1e-3


class TestRoundDistance:
    def test_corners_are_orthogonal(self):
        assert abs(round_distance([1, 0, 0], [0, 1, 0]) - np.pi / 2) < 1e-15

    def test_corner_to_center(self):
        d = round_distance([1, 0, 0], [1 / 3, 1 / 3, 1 / 3])
        assert abs(d - np.arccos(1 / np.sqrt(3))) < 1e-14

    def test_symmetric_and_triangle_inequality(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            p, q, r = rng.dirichlet(np.ones(3), size=3)
            assert abs(round_distance(p, q) - round_distance(q, p)) < 1e-15
            assert round_distance(p, r) <= round_distance(p, q) + round_distance(q, r) + 1e-12

    def test_validation(self):
        with pytest.raises(ZeroVector):
            round_distance([0.5, 0.2, 0.1], [1, 0, 0])
        with pytest.raises(DimensionMismatch):
            round_distance([1, 0, 0], [1, 0, 0, 0])

    def test_flat_pictures_bracket_the_corner_distance(self):
        # both flat drawings scaled to the true corner separation pi/2; the
        # bracketing holds on the near-corner region (max p >= 1/2) and the
        # barycentric bound holds on the whole interior
        scale = np.pi / 2
        verts = [np.array([0.0, 0.0]), np.array([1.0, 0.0]), np.array([0.5, np.sqrt(3) / 2])]
        chart_corners = [np.asarray(gnomonic_project(np.eye(3)[k]).coords) for k in range(3)]
        n = 24
        for i in range(1, n):
            for j in range(1, n - i):
                p = np.array([i, j, n - i - j], dtype=float) / n
                k = int(np.argmax(p))
                d_round = round_distance(p, np.eye(3)[k])
                d_bary = np.linalg.norm(sum(p[m] * verts[m] for m in range(3)) - verts[k]) * scale
                assert d_bary < d_round
                if p[k] >= 0.5:
                    x = np.asarray(simplex_to_gnomonic(p).coords)
                    d_chart = np.linalg.norm(x - chart_corners[k]) * scale
                    assert d_round < d_chart


class TestSimplexChart:
    def test_center_to_origin(self):
        np.testing.assert_allclose(
            simplex_to_gnomonic([1 / 3, 1 / 3, 1 / 3]).coords, [0, 0], atol=1e-14
        )

    def test_corners_to_chart_corners(self):
        for k in range(3):
            expected = gnomonic_project(np.eye(3)[k]).coords
            np.testing.assert_allclose(
                simplex_to_gnomonic(np.eye(3)[k]).coords, expected, atol=1e-14
            )

    def test_root_geodesics_are_straight(self):
        p, q = [0.6, 0.3, 0.1], [0.1, 0.2, 0.7]
        arc = trace_great_circle(np.sqrt(p), np.sqrt(q), 21)
        chart = np.array([gnomonic_project(x).coords for x in arc.points])
        assert collinearity_residual(chart) < 1e-9


class TestSchmidtSimplex:
    def test_opposite_corners(self):
        a = schmidt_state([1.0, 0.0])
        b = schmidt_state([0.0, 1.0])
        assert abs(fs_distance(a, b) - np.pi / 2) < 1e-14

    def test_separable_to_maximally_entangled(self):
        a = schmidt_state([1.0, 0.0])
        b = schmidt_state([1 / np.sqrt(2), 1 / np.sqrt(2)])
        assert abs(fs_distance(a, b) - np.pi / 4) < 1e-14

    def test_round_geometry(self):
        rng = np.random.default_rng(1)
        for _ in range(10):
            c = np.abs(rng.standard_normal(2))
            c /= np.linalg.norm(c)
            diag = schmidt_simplex_check(c, count=20, seed=3)
            assert diag.pairs_checked == 20
            assert diag.max_deviation < 1e-12

    def test_dimension_three_coefficients(self):
        c = np.abs(np.random.default_rng(2).standard_normal(3))
        c /= np.linalg.norm(c)
        diag = schmidt_simplex_check(c, count=10, seed=4)
        assert diag.max_deviation < 1e-12

    def test_invalid_coefficients(self):
        with pytest.raises(ZeroVector):
            schmidt_state([0.5, 0.5])
