import numpy as np
import pytest

from bodies import random_triangle
from convexheart import make_polygon, min_enclosing_disk
from convexheart.exceptions import DegenerateTriangle, NotObtuseConfiguration
from convexheart.geometry import chebyshev_set
from convexheart.heart import build_heart
from convexheart.triangle import (
    TriangleGeometry,
    classify_triangle,
    exact_triangle_heart,
    obtuse_sweep,
    parse_t_range,
    side_lengths,
    triangle_angles,
    triangle_area_formulas,
)


def inside(region, pts, tol=1e-9):
    return make_polygon(region).contains_points(np.atleast_2d(pts), tol)


class TestClassify:
    @pytest.mark.parametrize(
        "T, kind",
        [
            ([(0, 0), (4, 0), (1.2, 3)], "acute"),
            ([(0, 0), (4, 0), (0, 3)], "right"),
            ([(0, 0), (1, 0), (3, 1)], "obtuse"),
        ],
    )
    def test_examples(self, T, kind):
        assert classify_triangle(T) == kind

    def test_degenerate(self):
        with pytest.raises(DegenerateTriangle):
            classify_triangle([(0, 0), (1, 1), (2, 2)])
        with pytest.raises(DegenerateTriangle):
            exact_triangle_heart([(0, 0), (1, 0), (1, 1), (0, 1)])


class TestGeometry:
    def test_angle_sum_and_law_of_sines(self, rng):
        for _ in range(20):
            V = random_triangle(rng).vertices
            ang = triangle_angles(V)
            s = side_lengths(V)
            assert ang.sum() == pytest.approx(np.pi, abs=1e-12)
            np.testing.assert_allclose(s / np.sin(ang), s[0] / np.sin(ang[0]), rtol=1e-10)

    def test_frame(self, rng):
        T = random_triangle(rng, "obtuse")
        g = TriangleGeometry.from_vertices(T)
        assert g.gamma <= g.alpha <= g.beta
        assert g.area == pytest.approx(T.area, rel=1e-12)
        assert g.beta > np.pi / 2 and g.t > g.b


class TestExactHeart:
    def test_equilateral_point(self):
        H = exact_triangle_heart([(0, 0), (2, 0), (1, np.sqrt(3))])
        assert H.kind == "degenerate_symmetric" and len(H.polygon) == 1
        np.testing.assert_allclose(H.polygon[0], [1, np.sqrt(3) / 3], atol=1e-9)

    def test_isosceles_segment_on_axis(self):
        H = exact_triangle_heart([(0, 0), (2, 0), (1, 3)])
        assert H.kind == "degenerate_symmetric" and len(H.polygon) == 2
        np.testing.assert_allclose(H.polygon[:, 0], [1, 1], atol=1e-12)

    def test_acute_example(self):
        T = make_polygon([(0, 0), (4, 0), (1.2, 3)])
        H = exact_triangle_heart(T)
        assert H.kind == "acute_quadrangle"
        assert H.area < T.area / 4
        V = T.vertices
        medial = 0.5 * (V + np.roll(V, -1, axis=0))
        assert inside(medial, H.polygon).all()

    def test_obtuse_in_parallelogram(self, rng):
        # midpoints plus the intermediate-angle vertex A; with the smallest-angle
        # vertex C instead, the heart pokes out of the parallelogram near A
        poked = 0
        for _ in range(10):
            T = random_triangle(rng, "obtuse")
            g = TriangleGeometry.from_vertices(T)
            A, B, C = g.A, g.B, g.C
            H = exact_triangle_heart(g.vertices)
            assert H.kind.startswith("obtuse")
            assert inside([A, (A + B) / 2, (B + C) / 2, (A + C) / 2], H.polygon, 1e-9).all()
            poked += not inside([(A + B) / 2, (B + C) / 2, C, (A + C) / 2], H.polygon, 1e-9).all()
        assert poked > 0

    def test_contains_centers(self, rng):
        for kind in ("acute", "obtuse"):
            for _ in range(5):
                T = random_triangle(rng, kind)
                H = exact_triangle_heart(T)
                centers = [chebyshev_set(T).centroid, min_enclosing_disk(T).center, T.centroid]
                assert inside(H.polygon, centers, 1e-8).all()

    def test_matches_sampled_heart(self, rng):
        T = random_triangle(rng)
        H = exact_triangle_heart(T)
        h = build_heart(T, 720)
        assert h.area == pytest.approx(H.area, rel=1e-4)


class TestFormulas:
    def test_identity_at_t3(self):
        f = triangle_area_formulas(1, 1, 3)
        H = exact_triangle_heart([(0, 0), (1, 0), (3, 1)])
        assert H.kind == "obtuse_quadrangle"
        assert f.heart_area == pytest.approx(H.area, rel=1e-12)
        assert f.heart_area == pytest.approx(0.0819187585, rel=1e-9)

    def test_asymptotics(self):
        f = triangle_area_formulas(1, 1, 1e4)
        assert f.T1 == pytest.approx(0.5, rel=1e-3)
        assert f.T2 == pytest.approx(0.25, rel=1e-3)
        assert f.T3 == pytest.approx(1 / 16, rel=1e-3)
        assert f.ratio == pytest.approx(3 / 8, rel=1e-3)

    def test_trapezoid_limit(self):
        # the closed form tends to 15/8 of the triangle area
        f = triangle_area_formulas(1, 1, 1e5)
        assert f.DELH / 0.5 == pytest.approx(15 / 8, rel=1e-3)

    def test_heart_below_trapezoid(self):
        for t in (2, 5, 50, 500):
            f = triangle_area_formulas(1, 1, t)
            assert f.heart_area <= f.DELH

    @pytest.mark.parametrize("bht", [(1, 1, 0.5), (1, 1, 1), (2, 0.5, 2.5), (0, 1, 3)])
    def test_not_obtuse(self, bht):
        with pytest.raises(NotObtuseConfiguration):
            triangle_area_formulas(*bht)


class TestSweep:
    def test_increasing_ratio(self):
        rows = obtuse_sweep(1, 1, parse_t_range("2:1024:geometric"))
        r = [row.ratio for row in rows]
        assert all(a < b for a, b in zip(r, r[1:]))
        assert r[-1] == pytest.approx(3 / 8, abs=1e-3)
        assert all(row.ratio <= row.delh_ratio for row in rows)

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            obtuse_sweep(1, 1, [4, 2])


class TestParseRange:
    def test_forms(self):
        assert parse_t_range("2:16:geometric") == [2, 4, 8, 16]
        np.testing.assert_allclose(parse_t_range("1:100:geometric:3"), [1, 10, 100])
        np.testing.assert_allclose(parse_t_range("1:2:linear:3"), [1, 1.5, 2])
        assert parse_t_range("2,3.5,7") == [2, 3.5, 7]

    @pytest.mark.parametrize("bad", ["1:2", "1:2:linear", "1:2:cubic:3", "a,b"])
    def test_bad(self, bad):
        with pytest.raises(ValueError):
            parse_t_range(bad)
