"""Test bodies and random generators shared by the test modules."""

import numpy as np

from convexheart import make_polygon

SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
RECT = [(-2, -1), (2, -1), (2, 1), (-2, 1)]
TRI345 = [(0, 0), (4, 0), (0, 3)]


def q_eps(eps):
    return make_polygon(
        np.array([(-2, -1), (2, -1), (2, 1), (1, 1 + eps), (-2, 1), (-2 - eps, 0.5)], float)
    )


def rotate(points, theta, shift=(0.0, 0.0)):
    c, s = np.cos(theta), np.sin(theta)
    return np.asarray(points, float) @ np.array([[c, s], [-s, c]]) + np.asarray(shift)


def random_polygon(rng, n_min=5, n_max=12):
    """Random convex polygon with a vertex count in ``[n_min, n_max]``."""
    while True:
        n = int(rng.integers(n_min, n_max + 1))
        a = np.sort(rng.uniform(0, 2 * np.pi, n))
        P = np.column_stack([rng.uniform(0.6, 1.4) * np.cos(a), np.sin(a)])
        P = P @ np.array([[1.0, rng.uniform(-0.5, 0.5)], [0.0, 1.0]]) + rng.normal(size=2)
        try:
            K = make_polygon(P)
        except ValueError:
            continue
        # reject slivers whose vertex count collapsed or angles are razor thin
        if len(K) == n and K.area > 0.3:
            return K


def random_triangle(rng, kind=None):
    """Random scalene triangle; ``kind`` is ``"acute"``, ``"obtuse"`` or ``None``."""
    from convexheart import classify_triangle
    from convexheart.triangle import side_lengths, triangle_angles

    while True:
        P = rng.uniform(-1, 1, (3, 2))
        try:
            K = make_polygon(P)
        except ValueError:
            continue
        if K.area < 0.05:
            continue
        s = np.sort(side_lengths(K.vertices))
        if np.min(np.diff(s)) < 1e-3 or np.min(triangle_angles(K.vertices)) < 0.05:
            continue
        c = classify_triangle(K)
        if kind is None or c == kind:
            return K


def random_interior_point(rng, K, margin=0.05):
    """Uniform point of ``K`` at distance at least ``margin * diam`` from the boundary."""
    lo, hi = K.vertices.min(axis=0), K.vertices.max(axis=0)
    while True:
        x = rng.uniform(lo, hi)
        if np.all(K.slack(x)[0] < -margin * K.diameter):
            return x
