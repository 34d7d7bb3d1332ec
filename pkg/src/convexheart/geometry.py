"""Planar convex geometry primitives.

Polygons are stored as ``(n, 2)`` float arrays in counterclockwise order.
Derived regions that may collapse (a heart, a clipped cap, a Chebyshev
kernel) are plain vertex arrays with one, two or more rows; the helpers
prefixed ``region_`` accept those degenerate shapes as well.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .exceptions import Degenerate, NotConvex, TooFewVertices
from .validation import check_direction, check_point, check_points

DEFAULT_CONTAINMENT_TOL = 1e-9


def direction(angle):
    """Unit vector at ``angle`` radians from the positive x-axis."""
    return np.array([np.cos(angle), np.sin(angle)])


def directions(n):
    """``n`` unit vectors equispaced on the circle, starting at angle 0."""
    theta = 2.0 * np.pi * np.arange(n) / n
    return np.column_stack([np.cos(theta), np.sin(theta)])


class FoldAxis(NamedTuple):
    """The line ``<x, omega> = lam``; ``omega`` is a unit vector."""

    omega: np.ndarray
    lam: float

    @classmethod
    def make(cls, omega, lam):
        return cls(check_direction(omega), float(lam))


class Disk(NamedTuple):
    center: np.ndarray
    radius: float


def cross2(a, b):
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def polygon_area(verts):
    """Signed shoelace area; zero for fewer than three vertices."""
    if len(verts) < 3:
        return 0.0
    x, y = verts[:, 0], verts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def _polygon_centroid(verts):
    x, y = verts[:, 0], verts[:, 1]
    xn, yn = np.roll(x, -1), np.roll(y, -1)
    c = x * yn - xn * y
    a = 0.5 * c.sum()
    cx = ((x + xn) * c).sum() / (6.0 * a)
    cy = ((y + yn) * c).sum() / (6.0 * a)
    return a, np.array([cx, cy])


def _scale(points):
    span = points.max(axis=0) - points.min(axis=0)
    return float(np.hypot(*span))


def _drop_repeats(verts, tol):
    if len(verts) < 2:
        return verts
    keep = [verts[0]]
    for v in verts[1:]:
        if np.hypot(*(v - keep[-1])) > tol:
            keep.append(v)
    while len(keep) > 1 and np.hypot(*(keep[0] - keep[-1])) <= tol:
        keep.pop()
    return np.array(keep)


def _drop_collinear(verts, tol):
    verts = list(verts)
    changed = True
    while changed and len(verts) > 3:
        changed = False
        n = len(verts)
        for i in range(n):
            prev, cur, nxt = verts[i - 1], verts[i], verts[(i + 1) % n]
            e1, e2 = cur - prev, nxt - cur
            if abs(cross2(e1, e2)) <= tol * np.hypot(*e1) * np.hypot(*e2) and np.dot(e1, e2) > 0:
                del verts[i]
                changed = True
                break
    return np.array(verts)


def sort_ccw(points):
    """Order points by angle about their mean (any input permutation)."""
    pts = check_points(points)
    c = pts.mean(axis=0)
    ang = np.arctan2(pts[:, 1] - c[1], pts[:, 0] - c[0])
    return pts[np.argsort(ang, kind="stable")]


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """A convex body given by its CCW vertices.

    Build instances with :func:`make_polygon`; the constructor does not
    validate.
    """

    vertices: np.ndarray

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self.vertices.shape == other.vertices.shape and np.array_equal(
            self.vertices, other.vertices
        )

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def __repr__(self):
        return f"ConvexPolygon({self.vertices.tolist()!r})"

    @cached_property
    def edges(self):
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    @cached_property
    def normals(self):
        """Outward unit normals, one per edge ``v[i] -> v[i+1]``."""
        e = self.edges
        n = np.column_stack([e[:, 1], -e[:, 0]])
        return n / np.hypot(n[:, 0], n[:, 1])[:, None]

    @cached_property
    def offsets(self):
        """``K = {x : normals @ x <= offsets}``."""
        return np.einsum("ij,ij->i", self.normals, self.vertices)

    @cached_property
    def _area_centroid(self):
        return _polygon_centroid(self.vertices)

    @property
    def area(self):
        return float(self._area_centroid[0])

    @property
    def centroid(self):
        return self._area_centroid[1].copy()

    @cached_property
    def diameter(self):
        d = self.vertices[:, None, :] - self.vertices[None, :, :]
        return float(np.sqrt((d**2).sum(-1)).max())

    @property
    def scale(self):
        return _scale(self.vertices)

    @property
    def perimeter(self):
        return float(np.hypot(self.edges[:, 0], self.edges[:, 1]).sum())

    def slack(self, points):
        """Signed distances ``<x, n_i> - c_i`` for each point and edge."""
        pts = np.atleast_2d(points)
        return pts @ self.normals.T - self.offsets

    def contains_points(self, points, tol=0.0):
        """Boolean membership with absolute slack ``tol``."""
        return np.all(self.slack(points) <= tol, axis=-1)

    def translate(self, v):
        return ConvexPolygon(self.vertices + np.asarray(v, dtype=float))

    def scale_by(self, s):
        return ConvexPolygon(self.vertices * float(s))


def make_polygon(points, tol=None):
    """Canonicalize ``points`` (given in cyclic order) into a ConvexPolygon.

    Clockwise input is reversed, repeated and collinear vertices are merged,
    and the vertex list starts at the lexicographically smallest (x, y).
    ``tol`` is a relative tolerance (default ``1e-12``).

    >>> make_polygon([(0, 0), (1, 0), (2, 0), (1, 1)]).vertices.tolist()
    [[0.0, 0.0], [2.0, 0.0], [1.0, 1.0]]
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")
    pts = check_points(pts, min_points=3, name="vertices")
    rel = 1e-12 if tol is None else float(tol)
    scale = _scale(pts)
    if scale == 0.0:
        raise Degenerate("all vertices coincide")
    pts = _drop_repeats(pts, rel * scale)
    if len(pts) < 3:
        raise TooFewVertices("fewer than 3 distinct vertices")
    area = polygon_area(pts)
    if abs(area) <= rel * scale * scale:
        raise Degenerate("polygon has zero area")
    if area < 0:
        pts = pts[::-1]
    pts = _drop_collinear(pts, rel)
    e = np.roll(pts, -1, axis=0) - pts
    e_next = np.roll(e, -1, axis=0)
    lengths = np.hypot(e[:, 0], e[:, 1]) * np.hypot(e_next[:, 0], e_next[:, 1])
    turns = cross2(e, e_next)
    if np.any(turns < -rel * lengths):
        raise NotConvex("vertices are not in convex position (reflex turn)")
    turning = np.arctan2(turns, np.einsum("ij,ij->i", e, e_next)).sum()
    if abs(turning - 2.0 * np.pi) > 1e-6:
        raise NotConvex("vertex sequence winds more than once")
    if len(pts) < 3:
        raise Degenerate("polygon collapses to a segment")
    start = np.lexsort((pts[:, 1], pts[:, 0]))[0]
    verts = np.roll(pts, -start, axis=0)
    verts.setflags(write=False)
    return ConvexPolygon(verts)


def reflect_point(p, axis):
    """Mirror ``p`` (one point or an ``(n, 2)`` array) in ``axis``."""
    p = np.asarray(p, dtype=float)
    omega = np.asarray(axis.omega, dtype=float)
    s = p @ omega
    return p + 2.0 * (axis.lam - s)[..., None] * omega


def clip_halfplane(verts, normal, offset, eps=0.0):
    """Keep the part of polygon ``verts`` with ``<x, normal> <= offset``.

    Sutherland-Hodgman against one line; degenerate inputs (points,
    segments) are handled. Returns a possibly empty ``(k, 2)`` array.
    """
    if len(verts) == 0:
        return verts
    d = verts @ normal - offset
    inside = d <= eps
    if inside.all():
        return verts
    if not inside.any():
        return np.empty((0, 2))
    out = []
    n = len(verts)
    for i in range(n):
        j = (i + 1) % n
        p, q = verts[i], verts[j]
        if inside[i]:
            out.append(p)
        if inside[i] != inside[j]:
            denom = d[i] - d[j]
            t = 0.0 if denom == 0.0 else min(max(d[i] / denom, 0.0), 1.0)
            out.append(p + t * (q - p))
    return np.array(out)


def region_clean(verts, tol):
    """Drop near-duplicate consecutive vertices of a possibly thin region."""
    if len(verts) == 0:
        return verts
    return _drop_repeats(np.asarray(verts), tol)


def clip_cap(K, axis):
    """The cap ``K ∩ {<x, omega> >= lam}``, or ``None`` if it has zero area."""
    verts = clip_halfplane(K.vertices, -axis.omega, -axis.lam)
    if len(verts) < 3 or polygon_area(verts) <= 1e-14 * K.scale**2:
        return None
    return ConvexPolygon(region_clean(verts, 1e-14 * K.scale))


def area_centroid(K):
    """Return ``(area, centroid)`` of a polygon."""
    return K.area, K.centroid


def support(K, omega):
    """Support function ``max_{v in K} <v, omega>``."""
    return float(np.max(K.vertices @ np.asarray(omega, dtype=float)))


def contains_polygon(outer, inner, tol=DEFAULT_CONTAINMENT_TOL):
    """Vertex-wise containment of a convex region inside ``outer``.

    ``inner`` may be a ConvexPolygon, a raw vertex array or ``None`` (empty).
    """
    if inner is None:
        return True
    verts = inner.vertices if isinstance(inner, ConvexPolygon) else np.asarray(inner)
    if len(verts) == 0:
        return True
    return bool(np.all(outer.slack(verts) <= tol))


def region_area(verts):
    return abs(polygon_area(verts)) if len(verts) >= 3 else 0.0


def region_diameter(verts):
    if len(verts) < 2:
        return 0.0
    d = verts[:, None, :] - verts[None, :, :]
    return float(np.sqrt((d**2).sum(-1)).max())


def region_centroid(verts):
    """Area centroid, or the H^1 / H^0 centroid for thin regions."""
    if len(verts) >= 3 and polygon_area(verts) > 0:
        return _polygon_centroid(verts)[1]
    return np.asarray(verts).mean(axis=0)


def _point_segment_distance(p, a, b):
    ab = b - a
    denom = ab @ ab
    t = 0.0 if denom == 0 else min(max(((p - a) @ ab) / denom, 0.0), 1.0)
    return float(np.hypot(*(p - (a + t * ab))))


def region_distance(point, verts):
    """Euclidean distance from ``point`` to a convex region (0 if inside)."""
    p = check_point(point)
    verts = np.asarray(verts, dtype=float)
    n = len(verts)
    if n == 0:
        return np.inf
    if n == 1:
        return float(np.hypot(*(p - verts[0])))
    if n >= 3 and polygon_area(verts) > 0:
        e = np.roll(verts, -1, axis=0) - verts
        if np.all(cross2(e, p - verts) >= 0):
            return 0.0
    return min(_point_segment_distance(p, verts[i], verts[(i + 1) % n]) for i in range(n))


def hausdorff_distance(a, b):
    """Hausdorff distance between two convex regions given by vertices.

    The distance to a convex set is a convex function, so both one-sided
    suprema are attained at vertices.
    """
    da = max(region_distance(v, b) for v in np.asarray(a))
    db = max(region_distance(v, a) for v in np.asarray(b))
    return max(da, db)


def _circle_two(a, b):
    c = 0.5 * (a + b)
    return c, float(np.hypot(*(a - c)))


def _circle_three(a, b, c):
    bx, by = b - a
    cx, cy = c - a
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        pts = np.array([a, b, c])
        i, j = max(((0, 1), (0, 2), (1, 2)), key=lambda ij: np.hypot(*(pts[ij[0]] - pts[ij[1]])))
        return _circle_two(pts[i], pts[j])
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    center = a + np.array([ux, uy])
    return center, float(np.hypot(ux, uy))


def min_enclosing_disk(K, seed=0):
    """Smallest disk containing the polygon (randomized incremental).

    The shuffle is seeded so the output is reproducible.
    """
    pts = K.vertices if isinstance(K, ConvexPolygon) else check_points(K)
    pts = pts[np.random.default_rng(seed).permutation(len(pts))]
    eps = 1e-12 * max(_scale(pts), 1e-300)

    def outside(p, c, r):
        return np.hypot(*(p - c)) > r + eps

    c, r = pts[0].copy(), 0.0
    for i in range(1, len(pts)):
        if not outside(pts[i], c, r):
            continue
        c, r = pts[i].copy(), 0.0
        for j in range(i):
            if not outside(pts[j], c, r):
                continue
            c, r = _circle_two(pts[i], pts[j])
            for k in range(j):
                if outside(pts[k], c, r):
                    c, r = _circle_three(pts[i], pts[j], pts[k])
    return Disk(c, r)


@dataclass(frozen=True)
class ChebyshevSet:
    """Largest inscribed disks: radius, the set of their centers, its centroid."""

    inradius: float
    kernel: np.ndarray
    dimension: int
    centroid: np.ndarray


def offset_region(K, r):
    """``{x : <x, n_i> <= c_i - r}``; empty array when infeasible."""
    region = K.vertices
    for n, c in zip(K.normals, K.offsets):
        region = clip_halfplane(region, n, c - r)
        if len(region) == 0:
            break
    return region


def classify_region(verts, tol):
    """Dimension ladder shared by the Chebyshev set and the heart."""
    diam = region_diameter(verts)
    if diam < 10.0 * tol:
        return 0
    if region_area(verts) < 10.0 * tol * diam:
        return 1
    return 2


def _principal_segment(verts):
    c = verts.mean(axis=0)
    d = verts[:, None, :] - verts[None, :, :]
    i, j = np.unravel_index(np.argmax((d**2).sum(-1)), d.shape[:2])
    u = verts[j] - verts[i]
    u = u / np.hypot(*u)
    t = (verts - c) @ u
    return np.array([c + t.min() * u, c + t.max() * u])


def chebyshev_set(K, tol=None):
    """Inradius and incenter set by bisection on the inward edge offset.

    ``tol`` is an absolute length (default ``1e-9 * diameter``). The radius is
    bracketed far below ``tol`` so that the kernel is resolved at the
    classification scale.
    """
    tol = 1e-9 * K.diameter if tol is None else float(tol)
    lo, hi = 0.0, 0.5 * K.diameter
    target = min(1e-3 * tol, 1e-13 * K.diameter)
    for _ in range(200):
        if hi - lo <= target:
            break
        mid = 0.5 * (lo + hi)
        if len(offset_region(K, mid)) > 0:
            lo = mid
        else:
            hi = mid
    kernel = region_clean(offset_region(K, lo), 1e-3 * tol)
    dim = classify_region(kernel, tol)
    if dim == 0:
        kernel = region_centroid(kernel)[None, :]
    elif dim == 1:
        kernel = _principal_segment(kernel)
    return ChebyshevSet(inradius=lo, kernel=kernel, dimension=dim, centroid=region_centroid(kernel))
