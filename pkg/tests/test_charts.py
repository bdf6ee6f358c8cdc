import numpy as np
import pytest

from cpgeom import (
    ChartKind,
    ChartPoint,
    DegeneratePair,
    OutsideChart,
    collinearity_residual,
    fibonacci_sphere,
    gnomonic_metric,
    gnomonic_project,
    gnomonic_unproject,
    numeric_pullback,
    octant_torus_metric,
    stereographic_project,
    stereographic_unproject,
    torus_shape,
    trace_great_circle,
)
from cpgeom.states import OctantTorusCoords


def random_octant_point(rng, dim, margin=0.0):
    while True:
        r = np.abs(rng.standard_normal(dim))
        r /= np.linalg.norm(r)
        if r.min() >= margin:
            return r


class TestGnomonic:
    def test_center_maps_to_origin(self):
        for dim in (3, 4):
            p = gnomonic_project(np.ones(dim) / np.sqrt(dim))
            np.testing.assert_allclose(p.coords, np.zeros(dim - 1), atol=1e-14)

    def test_corner_separation_is_one(self):
        for dim in (3, 4):
            corners = [gnomonic_project(np.eye(dim)[i]).coords for i in range(dim)]
            for i in range(dim):
                for j in range(i + 1, dim):
                    d = np.linalg.norm(np.subtract(corners[i], corners[j]))
                    assert abs(d - 1.0) < 1e-12

    def test_round_trip(self):
        rng = np.random.default_rng(0)
        for dim in (3, 4):
            for _ in range(50):
                n = random_octant_point(rng, dim)
                back = gnomonic_unproject(gnomonic_project(n))
                np.testing.assert_allclose(back, n, atol=1e-12)

    def test_unproject_origin_and_corner(self):
        center = gnomonic_unproject(ChartPoint(ChartKind.GNOMONIC, (0.0, 0.0)))
        np.testing.assert_allclose(center, np.ones(3) / np.sqrt(3), atol=1e-14)
        corner_chart = gnomonic_project([1.0, 0.0, 0.0])
        back = gnomonic_unproject(corner_chart)
        np.testing.assert_allclose(back, [1, 0, 0], atol=1e-12)

    def test_chart_edge_midpoint_is_arc_midpoint(self):
        a = np.asarray(gnomonic_project([1.0, 0.0, 0.0]).coords)
        b = np.asarray(gnomonic_project([0.0, 1.0, 0.0]).coords)
        mid = gnomonic_unproject(ChartPoint(ChartKind.GNOMONIC, tuple((a + b) / 2)))
        np.testing.assert_allclose(mid, [1 / np.sqrt(2), 1 / np.sqrt(2), 0.0], atol=1e-12)

    def test_outside_chart(self):
        far = ChartPoint(ChartKind.GNOMONIC, (2.0, 2.0))
        with pytest.raises(OutsideChart):
            gnomonic_unproject(far)


class TestStereographic:
    def test_pole_corner_maps_to_origin(self):
        p = stereographic_project([1.0, 0.0, 0.0], pole_corner=0)
        np.testing.assert_allclose(p.coords, [0.0, 0.0], atol=1e-15)

    def test_equator_maps_to_unit_circle(self):
        p = stereographic_project([0.0, 1.0, 0.0], pole_corner=0)
        assert abs(np.linalg.norm(p.coords) - 1.0) < 1e-14

    def test_round_trip(self):
        rng = np.random.default_rng(1)
        for dim in (3, 4):
            for _ in range(100):
                n = random_octant_point(rng, dim)
                pole = int(rng.integers(dim))
                back = stereographic_unproject(stereographic_project(n, pole))
                np.testing.assert_allclose(back, n, atol=1e-12)

    def test_outside_chart_on_inverse(self):
        bad = ChartPoint(ChartKind.STEREOGRAPHIC, (1.5, 0.0), pole_corner=0)
        with pytest.raises(OutsideChart):
            stereographic_unproject(bad)

    def test_chart_conversion_consistency(self):
        # unproject one chart, reproject into the other and back
        rng = np.random.default_rng(2)
        for _ in range(50):
            n = random_octant_point(rng, 3, margin=1e-3)
            g = gnomonic_project(n)
            s = stereographic_project(gnomonic_unproject(g), pole_corner=1)
            back = stereographic_unproject(s)
            np.testing.assert_allclose(back, n, atol=1e-10)


class TestGnomonicMetric:
    def test_origin_is_six_identity(self):
        g = gnomonic_metric(ChartPoint(ChartKind.GNOMONIC, (0.0, 0.0)))
        np.testing.assert_allclose(g.entries, 6.0 * np.eye(2), atol=1e-14)

    def test_positive_definite_interior(self):
        rng = np.random.default_rng(3)
        count = 0
        while count < 100:
            n = random_octant_point(rng, 3, margin=1e-2)
            p = gnomonic_project(n)
            ev = np.linalg.eigvalsh(gnomonic_metric(p).entries)
            assert ev.min() > 0
            count += 1

    def test_matches_unprojection_pullback(self):
        # oracle: ambient round metric sum(dn_i^2) through the inverse map
        def emb(x):
            return gnomonic_unproject(ChartPoint(ChartKind.GNOMONIC, tuple(x))).astype(complex)

        rng = np.random.default_rng(4)
        for _ in range(25):
            n = random_octant_point(rng, 3, margin=0.05)
            x = np.asarray(gnomonic_project(n).coords)
            num = np.zeros((2, 2))
            h = 1e-5
            tang = []
            for i in range(2):
                e = np.zeros(2)
                e[i] = h
                tang.append((emb(x + e).real - emb(x - e).real) / (2 * h))
            for i in range(2):
                for j in range(2):
                    num[i, j] = tang[i] @ tang[j]
            g = gnomonic_metric(ChartPoint(ChartKind.GNOMONIC, tuple(x)))
            np.testing.assert_allclose(g.entries, num, atol=1e-7)


class TestGreatCircle:
    def test_edge_arc_is_straight_in_chart(self):
        arc = trace_great_circle([1, 0, 0], [0, 1, 0], 33)
        chart = np.array([gnomonic_project(p).coords for p in arc.points])
        assert collinearity_residual(chart) < 1e-10
        assert arc.in_octant.all()

    def test_generic_arcs_are_straight_in_chart(self):
        rng = np.random.default_rng(5)
        for dim in (3, 4):
            for _ in range(20):
                a = random_octant_point(rng, dim)
                b = random_octant_point(rng, dim)
                arc = trace_great_circle(a, b, 17)
                chart = np.array([gnomonic_project(p).coords for p in arc.points])
                assert collinearity_residual(chart) < 1e-9

    def test_arc_midpoint(self):
        a = np.array([1.0, 0, 0])
        b = np.array([0, 1.0, 0])
        arc = trace_great_circle(a, b, 3)
        np.testing.assert_allclose(arc.points[1], (a + b) / np.linalg.norm(a + b), atol=1e-14)

    def test_edge_trisection_points(self):
        # geodesics through the points at arc thirds of an edge cross it there
        third = np.pi / 6
        p1 = np.array([np.cos(third), np.sin(third), 0.0])
        p2 = np.array([np.cos(2 * third), np.sin(2 * third), 0.0])
        opposite = np.array([0.0, 0.0, 1.0])
        for target in (p1, p2):
            arc = trace_great_circle(opposite, target, 65)
            end = arc.points[-1]
            d = np.arccos(np.clip(end @ np.array([1.0, 0, 0]), -1, 1))
            assert abs(d % (np.pi / 6)) < 1e-12 or abs(d % (np.pi / 6) - np.pi / 6) < 1e-12

    def test_out_of_octant_flagging(self):
        inside = np.array([0.2, 0.4, np.sqrt(1 - 0.2**2 - 0.4**2)])
        outside = np.array([-0.5, 0.6, np.sqrt(1 - 0.25 - 0.36)])
        arc = trace_great_circle(inside, outside, 9)
        assert arc.in_octant[0]
        assert not arc.in_octant[-1]
        assert len(arc.points) == 9

    def test_degenerate_pair(self):
        with pytest.raises(DegeneratePair):
            trace_great_circle([1, 0, 0], [1, 0, 0], 5)
        with pytest.raises(DegeneratePair):
            trace_great_circle([1, 0, 0], [-1, 0, 0], 5)


class TestTorusShape:
    def test_center_area(self):
        shape = torus_shape(np.ones(3) / np.sqrt(3))
        assert abs(shape.area_or_volume - 4 * np.pi**2 / (3 * np.sqrt(3))) < 1e-12

    def test_edge_degenerates(self):
        shape = torus_shape([0.6, 0.0, 0.8])
        assert shape.side_lengths[0] == 0.0
        assert shape.area_or_volume == 0.0

    def test_area_law(self):
        rng = np.random.default_rng(6)
        for _ in range(100):
            n = random_octant_point(rng, 3, margin=1e-3)
            s = torus_shape(n)
            lhs = s.side_lengths[0] * s.side_lengths[1] * np.sin(s.pairwise_angles[(1, 2)])
            assert abs(lhs - s.area_or_volume) < 1e-10

    def test_center_is_biggest_torus(self):
        rng = np.random.default_rng(7)
        best = torus_shape(np.ones(3) / np.sqrt(3)).area_or_volume
        for _ in range(200):
            n = random_octant_point(rng, 3)
            assert torus_shape(n).area_or_volume <= best + 1e-12

    def test_cp3_fiber_volume_matches_phase_block(self):
        rng = np.random.default_rng(8)
        for _ in range(30):
            n = random_octant_point(rng, 4, margin=0.1)
            c = OctantTorusCoords(tuple(n), (0.0, 0.0, 0.0))
            g = octant_torus_metric(c)
            det = np.linalg.det(g.entries[3:, 3:])
            vol = (2 * np.pi) ** 3 * np.sqrt(det)
            assert abs(torus_shape(n).area_or_volume - vol) < 1e-10

    def test_small_distance_sphere_tori_become_rectangular(self):
        for d in (0.3, 0.1, 0.03):
            n = np.array([np.cos(d), np.sin(d) / np.sqrt(2), np.sin(d) / np.sqrt(2)])
            ang = torus_shape(n).pairwise_angles[(1, 2)]
            assert abs(ang - np.pi / 2) < d**2  # angle -> pi/2 quadratically


class TestNumericPullback:
    def test_constant_embedding_gives_zero(self):
        z = np.array([1.0, 2j, 0.5, 0.0])
        g = numeric_pullback(lambda x: z, [0.3, 0.4])
        np.testing.assert_allclose(g.entries, np.zeros((2, 2)), atol=1e-12)

    def test_coord_names(self):
        g = numeric_pullback(lambda x: np.array([1.0 + 0j, x[0]]), [0.1], coord_names=("t",))
        assert g.coords == ("t",)


def test_fibonacci_sphere_units_and_spread():
    pts = fibonacci_sphere(128)
    np.testing.assert_allclose(np.linalg.norm(pts, axis=1), 1.0, atol=1e-12)
    gram = pts @ pts.T
    np.fill_diagonal(gram, -1.0)
    assert gram.max() < 1.0 - 1e-3  # no duplicated directions
