import json

import numpy as np
import pytest

from bodies import random_interior_point, random_polygon, rotate
from convexheart import make_polygon
from convexheart.folding import folding_profile
from convexheart.geometry import contains_polygon, hausdorff_distance, region_area
from convexheart.heart import (
    build_heart,
    diameter_lower_bound,
    distinguished_centers,
    heart_dimension,
    intersect_halfplanes,
)
from convexheart.triangle import exact_triangle_heart


def test_square_is_its_center(square):
    h = build_heart(square, 360)
    assert h.dimension == 0
    np.testing.assert_allclose(h.region, [[0.5, 0.5]], atol=1e-8)
    assert h.contains([0.5, 0.5]) and not h.contains([0.6, 0.5])


def test_rectangle_is_its_center(rect):
    h = build_heart(rect, 360)
    assert h.dimension == 0
    np.testing.assert_allclose(h.region[0], [0, 0], atol=1e-8)


def test_isosceles_is_at_most_a_segment():
    K = make_polygon([(-2, 0), (2, 0), (0, 0.5)])
    h = build_heart(K, 360)
    assert heart_dimension(h) <= 1
    assert np.all(np.abs(h.region[:, 0]) <= 1e-7)


def test_triangle_matches_exact(tri345):
    h = build_heart(tri345, 720)
    ex = exact_triangle_heart(tri345)
    assert h.area == pytest.approx(ex.area, rel=1e-4)
    assert hausdorff_distance(h.region, ex.polygon) <= 1e-6 * tri345.diameter
    assert max(h.distance(v) for v in ex.polygon) <= 1e-7


def test_diameter_lower_bound_345(tri345):
    M, C, I = distinguished_centers(tri345)
    np.testing.assert_allclose(M, [4 / 3, 1])
    np.testing.assert_allclose(C, [2, 1.5])
    np.testing.assert_allclose(I, [1, 1], atol=1e-8)
    assert diameter_lower_bound(tri345) == pytest.approx(np.sqrt(1.25), abs=1e-8)
    assert build_heart(tri345).diameter >= np.sqrt(1.25) - 1e-7


def test_monotone_in_directions(rng):
    K = random_polygon(rng)
    a = [build_heart(K, n, cuts=False, mirrors=False).area for n in (90, 180, 360, 720)]
    assert all(x >= y - 1e-12 for x, y in zip(a, a[1:]))


def test_cuts_only_shrink(rng):
    K = random_polygon(rng)
    plain = build_heart(K, 180, cuts=False)
    cut = build_heart(K, 180)
    assert cut.area <= plain.area + 1e-12
    assert contains_polygon(make_polygon(plain.region), cut.region, 1e-9)


def test_membership_matches_halfplane_definition(rng):
    K = random_polygon(rng)
    tol = 1e-9 * K.diameter
    prof = folding_profile(K, 180, tol)
    region = intersect_halfplanes(K, prof.omegas, prof.values, tol)
    h = make_polygon(region)
    for _ in range(200):
        x = random_interior_point(rng, K, 0.0)
        slack = (prof.omegas @ x - prof.values).max()
        if abs(slack) < 1e-6:
            continue
        assert (slack <= 0) == bool(h.contains_points(x, 1e-9)[0])


def test_convergence_area_reported(tri345):
    h = build_heart(tri345, 180, convergence=True)
    assert h.area_refined is not None and h.area_refined <= h.area + 1e-12


def test_rotated_symmetric_hexagon_on_mirror():
    base = [(-2, -1), (2, -1), (3, 0), (2, 1), (-2, 1), (-3, 0)]
    K = make_polygon(rotate(base, 0.3, (1, 2)))
    h = build_heart(K, 360)
    assert h.dimension == 0
    np.testing.assert_allclose(h.region[0], K.centroid, atol=1e-7)


def test_to_dict_json(tri345):
    d = json.loads(json.dumps(build_heart(tri345, 90).to_dict()))
    assert {"vertices", "area", "diameter", "dimension", "n_directions", "tol"} <= set(d)
    assert d["area"] == pytest.approx(region_area(np.array(d["vertices"])))


def test_bad_directions(square):
    with pytest.raises(ValueError):
        build_heart(square, 4)
