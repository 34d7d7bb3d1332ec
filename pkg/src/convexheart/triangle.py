"""Exact hearts of triangles and the obtuse-triangle area sweep.

The heart of a triangle is cut out by four lines: the bisectors of its
smallest and largest angles and the perpendicular bisectors of its shortest
and longest sides; for non-acute triangles the longest side closes the
polygon. Each line is a maximal fold, so the heart lies on the side of it
that contains the centroid (on the line itself when the line is a mirror).
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import DegenerateTriangle, InvalidPolygon, NotObtuseConfiguration
from .geometry import (
    ConvexPolygon,
    _drop_collinear,
    classify_region,
    clip_halfplane,
    make_polygon,
    region_area,
    region_clean,
)
from .validation import check_points

ANGLE_TOL = 1e-12
TIE_TOL = 1e-9


def _as_triangle(T):
    if isinstance(T, ConvexPolygon):
        verts = T.vertices
    else:
        pts = check_points(T, min_points=3, name="triangle")
        if len(pts) != 3:
            raise DegenerateTriangle(f"a triangle needs exactly 3 vertices, got {len(pts)}")
        try:
            verts = make_polygon(pts).vertices
        except InvalidPolygon as exc:
            raise DegenerateTriangle(str(exc)) from exc
    if len(verts) != 3:
        raise DegenerateTriangle(f"a triangle needs exactly 3 vertices, got {len(verts)}")
    return make_polygon(verts)


def triangle_angles(verts):
    """Interior angle at each vertex, in vertex order."""
    out = []
    for i in range(3):
        u = verts[(i + 1) % 3] - verts[i]
        v = verts[(i + 2) % 3] - verts[i]
        out.append(np.arctan2(abs(u[0] * v[1] - u[1] * v[0]), u @ v))
    return np.array(out)


def side_lengths(verts):
    """Length of the side opposite each vertex."""
    return np.array([np.hypot(*(verts[(i + 2) % 3] - verts[(i + 1) % 3])) for i in range(3)])


@dataclass(frozen=True)
class TriangleGeometry:
    """A triangle in the frame ``A = (0, 0)``, ``B = (b, 0)``, ``C = (t, h)``.

    ``B`` carries the largest angle and ``C`` the smallest, so ``b = |AB|``
    is the shortest side.
    """

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    b: float
    h: float
    t: float
    alpha: float
    beta: float
    gamma: float

    @classmethod
    def from_bht(cls, b, h, t):
        A, B, C = np.zeros(2), np.array([b, 0.0]), np.array([t, h])
        al, be, ga = triangle_angles(np.array([A, B, C]))
        return cls(A, B, C, float(b), float(h), float(t), al, be, ga)

    @classmethod
    def from_vertices(cls, T):
        K = _as_triangle(T)
        V = K.vertices
        ang = triangle_angles(V)
        order = np.argsort(ang, kind="stable")
        C, A, B = V[order[0]], V[order[1]], V[order[2]]
        u = (B - A) / np.hypot(*(B - A))
        rot = np.array([[u[0], u[1]], [-u[1], u[0]]])
        c = rot @ (C - A)
        b = float(np.hypot(*(B - A)))
        t, h = float(c[0]), float(abs(c[1]))
        return cls.from_bht(b, h, t)

    @property
    def vertices(self):
        return np.array([self.A, self.B, self.C])

    @property
    def area(self):
        return 0.5 * self.b * self.h


def classify_triangle(T):
    """``"acute"``, ``"right"`` or ``"obtuse"`` from the largest angle."""
    K = _as_triangle(T)
    big = triangle_angles(K.vertices).max()
    if abs(big - 0.5 * np.pi) <= ANGLE_TOL:
        return "right"
    return "obtuse" if big > 0.5 * np.pi else "acute"


@dataclass(frozen=True)
class TriangleHeartExact:
    polygon: np.ndarray
    kind: str

    @property
    def area(self):
        return region_area(self.polygon)


def _heart_lines(V):
    """(point, unit normal, is_mirror) for the bisectors and side axes."""
    ang = triangle_angles(V)
    sides = side_lengths(V)
    lines = []
    for i in range(3):
        if ang[i] <= ang.min() + TIE_TOL or ang[i] >= ang.max() - TIE_TOL:
            P = V[i]
            u = V[(i + 1) % 3] - P
            w = V[(i + 2) % 3] - P
            d = u / np.hypot(*u) + w / np.hypot(*w)
            n = np.array([-d[1], d[0]])
            mirror = abs(np.hypot(*u) - np.hypot(*w)) <= TIE_TOL * sides.max()
            lines.append((P, n / np.hypot(*n), mirror))
    scale = sides.max()
    for i in range(3):
        if sides[i] <= sides.min() + TIE_TOL * scale or sides[i] >= sides.max() - TIE_TOL * scale:
            a, b = V[(i + 1) % 3], V[(i + 2) % 3]
            n = (b - a) / np.hypot(*(b - a))
            mirror = abs(ang[(i + 1) % 3] - ang[(i + 2) % 3]) <= TIE_TOL
            lines.append((0.5 * (a + b), n, mirror))
    return lines


def exact_triangle_heart(T, tol=None):
    """Heart of a triangle from its bisector / side-axis construction."""
    K = _as_triangle(T)
    tol = 1e-9 * K.diameter if tol is None else float(tol)
    V = K.vertices
    M = K.centroid
    region = V
    has_mirror = False
    for P, n, mirror in _heart_lines(V):
        c = P @ n
        if mirror:
            has_mirror = True
            halfplanes = [(n, c), (-n, -c)]
        elif M @ n < c:
            halfplanes = [(n, c)]
        else:
            halfplanes = [(-n, -c)]
        for nn, cc in halfplanes:
            region = clip_halfplane(region, nn, cc, eps=1e-3 * tol)
    region = region_clean(region, 1e-3 * tol)
    if has_mirror:
        if classify_region(region, tol) == 0:
            region = region.mean(axis=0)[None, :]
        else:
            d = region[:, None, :] - region[None, :, :]
            i, j = np.unravel_index(np.argmax((d**2).sum(-1)), d.shape[:2])
            region = np.array([region[i], region[j]])
        return TriangleHeartExact(region, "degenerate_symmetric")
    region = _drop_collinear(region, 1e-9)
    if classify_triangle(K) == "acute":
        kind = "acute_quadrangle"
    else:
        kind = "obtuse_pentagon" if len(region) >= 5 else "obtuse_quadrangle"
    return TriangleHeartExact(region, kind)


class TriangleAreas(NamedTuple):
    T1: float
    T2: float
    T3: float
    DELH: float
    heart_area: float
    ratio: float


def triangle_area_formulas(b, h, t):
    """Closed-form areas for the obtuse frame ``A=(0,0), B=(b,0), C=(t,h)``.

    ``heart_area = T1 - T2 - T3`` is the heart when it is the quadrangle cut
    by the bisectors at ``B`` and ``C``, the axis of ``AC`` and ``AC`` itself.
    ``DELH`` is the enclosing trapezoid.
    """
    b, h, t = float(b), float(h), float(t)
    if not (b > 0 and h > 0):
        raise NotObtuseConfiguration("b and h must be positive")
    a2 = h * h + (t - b) ** 2
    c2 = h * h + t * t
    if not t > b:
        raise NotObtuseConfiguration(f"angle at B is not obtuse for t={t} <= b={b}")
    if not (b * b < a2 and b * b < c2):
        raise NotObtuseConfiguration("AB is not the shortest side")
    g = TriangleGeometry.from_bht(b, h, t)
    be, ga = g.beta, g.gamma
    T1 = 0.5 * a2 * np.sin(be / 2) * np.sin(ga) / np.sin(be / 2 + ga)
    T2 = 0.5 * a2 * np.sin(be / 2) * np.sin(ga / 2) / np.sin(be / 2 + ga / 2)
    tg = np.tan(ga / 2)
    T3 = 0.125 * c2 * tg
    DELH = 0.5 * b * b * h * h / (c2 * tg) - 0.125 * c2 * tg
    heart = T1 - T2 - T3
    return TriangleAreas(T1, T2, T3, DELH, heart, heart / (0.5 * b * h))


class SweepRow(NamedTuple):
    t: float
    ratio: float
    delh_ratio: float
    kind: str


def obtuse_sweep(b, h, t_values):
    """Heart-to-triangle and trapezoid-to-triangle area ratios along ``t``.

    ``ratio`` uses the exact heart polygon, so it is valid for both the
    pentagon and the quadrangle regimes.
    """
    ts = np.asarray(t_values, dtype=float)
    if np.any(np.diff(ts) <= 0):
        raise ValueError("t_values must be strictly increasing")
    rows = []
    area = 0.5 * b * h
    for t in ts:
        f = triangle_area_formulas(b, h, t)
        H = exact_triangle_heart([(0.0, 0.0), (b, 0.0), (t, h)])
        rows.append(SweepRow(float(t), H.area / area, f.DELH / area, H.kind))
    return rows


def parse_t_range(text):
    """Parse ``"a:b:geometric[:n]"``, ``"a:b:linear:n"`` or ``"t1,t2,..."``.

    Without ``n`` a geometric range doubles from ``a`` until it passes ``b``.
    """
    parts = text.split(":")
    if len(parts) == 1:
        return [float(v) for v in text.split(",")]
    if len(parts) not in (3, 4):
        raise ValueError(f"bad t range {text!r}")
    a, b, kind = float(parts[0]), float(parts[1]), parts[2]
    n = int(parts[3]) if len(parts) == 4 else None
    if kind == "geometric":
        if n is None:
            out = [a]
            while out[-1] * 2 <= b * (1 + 1e-12):
                out.append(out[-1] * 2)
            return out
        return list(np.geomspace(a, b, n))
    if kind == "linear":
        if n is None:
            raise ValueError("linear ranges need a point count")
        return list(np.linspace(a, b, n))
    raise ValueError(f"unknown range kind {kind!r}")
