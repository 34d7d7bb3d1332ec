import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bodies import q_eps, random_polygon, random_triangle, rotate
from convexheart import FoldAxis, make_polygon
from convexheart.folding import (
    detect_symmetry,
    fold_values,
    fold_violation,
    folding_profile,
    is_admissible_fold,
    maximal_folding,
    symmetry_directions,
)
from convexheart.oracle import literal_admissible, predicate_scan_folding


def unit(theta):
    return np.array([np.cos(theta), np.sin(theta)])


class TestAdmissible:
    def test_square_examples(self, square):
        assert is_admissible_fold(square, FoldAxis.make([1, 0], 0.5))
        assert is_admissible_fold(square, FoldAxis.make([1, 0], 0.8))
        assert not is_admissible_fold(square, FoldAxis.make([1, 0], 0.3))
        # empty cap is trivially admissible
        assert is_admissible_fold(square, FoldAxis.make([1, 0], 1.5))

    def test_triangle_examples(self, tri345):
        assert not is_admissible_fold(tri345, FoldAxis.make([1, 0], 4 / 3))
        assert is_admissible_fold(tri345, FoldAxis.make([1, 0], 2.0))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10_000), st.floats(0, 2 * np.pi), st.floats(0, 1))
    def test_matches_literal_predicate(self, seed, th, frac):
        K = random_polygon(np.random.default_rng(seed), 3, 9)
        om = unit(th)
        lo, hi = K.centroid @ om, (K.vertices @ om).max()
        lam = lo + frac * (hi - lo)
        tol = 1e-9 * K.diameter
        v = fold_violation(K, om[None], np.array([lam]))[0]
        # skip knife-edge cases where the two predicates may disagree by rounding
        if abs(v) > 1e3 * tol:
            assert (v <= tol) == literal_admissible(K, om, lam, tol)


class TestMaximalFolding:
    def test_square_axis_and_diagonal(self, square):
        assert maximal_folding(square, [1, 0]).r_value == pytest.approx(0.5, abs=1e-9)
        d = maximal_folding(square, [1, 1])
        assert d.r_value == pytest.approx(np.sqrt(2) / 2, abs=1e-9)
        assert d.admissible_at_r_plus and d.monotone

    def test_rectangle_closed_form(self, rect):
        for th in (1e-3, 0.05, 0.3):
            r = maximal_folding(rect, unit(th)).r_value
            assert r == pytest.approx(2 * np.cos(th) - np.sin(th), abs=1e-7)
        assert maximal_folding(rect, unit(1e-3)).r_value == pytest.approx(2, abs=2e-3)

    def test_above_centroid_projection(self, tri345):
        for th in np.linspace(0, 2 * np.pi, 37):
            om = unit(th)
            assert maximal_folding(tri345, om).r_value >= tri345.centroid @ om - 1e-12

    def test_bracket_certified(self, tri345):
        tol = 1e-9 * tri345.diameter
        s = maximal_folding(tri345, unit(0.7), tol)
        assert s.bracket_width <= tol
        assert is_admissible_fold(tri345, FoldAxis(s.omega, s.r_value), tol)
        assert not is_admissible_fold(tri345, FoldAxis(s.omega, s.r_value - 2 * tol), 1e-3 * tol)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10_000), st.floats(0, 2 * np.pi))
    def test_agrees_with_literal_scan(self, seed, th):
        K = random_polygon(np.random.default_rng(seed), 3, 8)
        om = unit(th)
        tol = 1e-9 * K.diameter
        r = maximal_folding(K, om, tol).r_value
        ref = predicate_scan_folding(K, om, 200, tol, refine=True)
        assert r == pytest.approx(ref, abs=1e-6 * K.diameter)

    def test_scan_sequence_is_false_then_true(self, rng):
        # the predicate switches once along the search interval on these bodies
        for _ in range(10):
            K = random_polygon(rng, 3, 10)
            for th in np.linspace(0, 2 * np.pi, 24, endpoint=False):
                om = unit(th)
                lams = np.linspace(K.centroid @ om, (K.vertices @ om).max(), 200)
                ok = fold_violation(K, np.tile(om, (200, 1)), lams) <= 1e-9 * K.diameter
                assert not np.any(ok[:-1] & ~ok[1:])

    def test_prescan_monotone_flag(self, rng):
        K = random_polygon(rng)
        _, _, cert, mono = fold_values(K, unit(np.linspace(0, 6, 50)).T)
        assert mono.all() and cert.all()

    def test_order_independent(self, rng):
        K = random_polygon(rng)
        oms = unit(np.linspace(0, 2 * np.pi, 40, endpoint=False)).T
        perm = rng.permutation(40)
        a = fold_values(K, oms)[0]
        b = fold_values(K, oms[perm])[0]
        np.testing.assert_array_equal(a[perm], b)
        np.testing.assert_array_equal(a, fold_values(K, oms, n_jobs=1)[0])


class TestProfile:
    def test_square_four_directions(self, square):
        prof = folding_profile(square, 4)
        np.testing.assert_allclose(prof.values, [0.5, 0.5, -0.5, -0.5], atol=1e-9)
        np.testing.assert_allclose(prof.angles, [0, np.pi / 2, np.pi, 3 * np.pi / 2])

    def test_rejects_too_few(self, square):
        with pytest.raises(ValueError):
            folding_profile(square, 3)

    def test_bidirectional_bound(self, rng):
        # R(w) + R(-w) >= 0 since both exceed the centroid projections
        K = random_polygon(rng)
        prof = folding_profile(K, 64)
        v = prof.values
        assert np.all(v + np.roll(v, 32) >= -1e-12)
        assert np.all(v >= prof.omegas @ K.centroid - 1e-12)

    def test_json(self, tri345):
        d = json.loads(json.dumps(folding_profile(tri345, 8).to_dict()))
        assert len(d["samples"]) == 8
        assert set(d["samples"][0]) == {"angle", "r", "bracket"}


class TestSymmetry:
    def test_square(self, square):
        assert detect_symmetry(square, [1, 0])
        assert detect_symmetry(square, [1, 1])
        assert not detect_symmetry(square, [1, 2])

    def test_directions_count(self, square, rect, tri345):
        assert len(symmetry_directions(square)) == 4
        assert len(symmetry_directions(rect)) == 2
        assert len(symmetry_directions(tri345)) == 0

    def test_mirror_gives_centroid_value(self):
        K = make_polygon(rotate([(-2, 0), (2, 0), (1, 1), (-1, 1)], 0.4, (3, -1)))
        dirs = symmetry_directions(K)
        assert len(dirs) == 1
        for om in (dirs[0], -dirs[0]):
            assert maximal_folding(K, om).r_value == pytest.approx(K.centroid @ om, abs=1e-8)

    def test_scalene_has_none(self, rng):
        assert len(symmetry_directions(random_triangle(rng))) == 0
        assert len(symmetry_directions(q_eps(0.1))) == 0
