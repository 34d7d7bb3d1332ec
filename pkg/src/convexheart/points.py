"""Moments of a convex polygon, their minimizers, and Fraenkel asymmetry.

All moments are evaluated with a signed fan of triangles whose apex is the
evaluation point ``x``. In polar coordinates about the apex the radial
integral is elementary, which leaves one smooth 1D integral per edge:

* ``int_K |x-y|^p dy = sum_i c_i / (p+2) * int_0^1 |d_i(u)|^p du``
* ``int_K log|x-y| dy = sum_i c_i * (J_i / 2 - 1/4)``, ``J_i = int_0^1 log|d_i(u)| du``
* ``int_{R^2 \\ K} |x-y|^-p dy = sum_i h_i^(2-p) / (p-2) * int cos^(p-2)(psi) dpsi``

where ``d_i(u)`` runs along edge ``i`` relative to ``x``, ``c_i`` is the
cross product of the edge endpoints relative to ``x`` and ``h_i`` is the
distance from ``x`` to the edge line. ``J_i`` has a closed form.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import logsumexp, xlogy

from .exceptions import PointTooCloseToBoundary
from .geometry import (
    chebyshev_set,
    cross2,
    min_enclosing_disk,
    offset_region,
    region_area,
    region_centroid,
)
from .validation import check_point, check_positive

DEFAULT_ORDER = 12
# edge panels shrink geometrically toward the foot of the perpendicular from x
PANEL_RATIO = 0.25
PANEL_LEVELS = 10
PHI = 0.5 * (3.0 - np.sqrt(5.0))


@dataclass(frozen=True)
class MomentSpec:
    """Which moment to evaluate: ``"power"`` (p > 0), ``"inverse"`` (p > 2) or ``"log"``."""

    kind: str
    p: float = None
    quadrature_order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.kind == "power":
            check_positive(self.p, "p")
        elif self.kind == "inverse":
            if self.p is None or not self.p > 2:
                raise ValueError(f"inverse moments need p > 2, got {self.p}")
        elif self.kind != "log":
            raise ValueError(f"unknown moment kind {self.kind!r}")

    @property
    def label(self):
        if self.kind == "log":
            return "mu_log"
        return f"{'mu' if self.kind == 'power' else 'nu'}_{self.p:g}"


@dataclass(frozen=True)
class MinimizerResult:
    point: np.ndarray
    value: float
    flat_flag: bool
    iterations: int


@dataclass(frozen=True)
class FraenkelResult:
    r_star: float
    center: np.ndarray
    gamma_max: float
    asymmetry: float
    flat_flag: bool = False


@lru_cache(maxsize=64)
def _gauss01(order):
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


def _fan(K, x):
    a = K.vertices - x
    b = np.roll(a, -1, axis=0)
    return a, b - a, cross2(a, b)


def _power_line_means(a, e, p, order):
    """``int_0^1 |a_i + u e_i|^p du`` per edge.

    When ``x`` is close to an edge line relative to the edge length the
    integrand has complex singularities near the real segment, so a single
    Gauss rule converges slowly. Composite Gauss panels graded toward the
    foot point keep the relative error near 1e-14.
    """
    t0 = np.clip(-(a * e).sum(-1) / (e * e).sum(-1), 0.0, 1.0)
    g = np.concatenate([[0.0], PANEL_RATIO ** np.arange(PANEL_LEVELS, 0, -1), [1.0]])
    right = t0[:, None] + (1.0 - t0)[:, None] * g
    left = t0[:, None] * (1.0 - g[::-1])
    br = np.concatenate([left, right[:, 1:]], axis=1)
    lo, hi = br[:, :-1], br[:, 1:]
    # |d(u)|^p is a polynomial of degree p for even p; enough nodes to be exact
    u, w = _gauss01(max(order, int(np.ceil(p / 2.0)) + 2))
    nodes = lo[..., None] + (hi - lo)[..., None] * u
    d = a[:, None, None, :] + nodes[..., None] * e[:, None, None, :]
    r2 = (d**2).sum(-1)
    return ((hi - lo) * ((r2 ** (0.5 * p)) @ w)).sum(axis=1)


def mu_p_value(K, x, p, order=DEFAULT_ORDER):
    """``int_K |x - y|^p dy`` for any finite ``x`` (inside K or not)."""
    x = check_point(x, "x")
    p = check_positive(p, "p")
    a, e, c = _fan(K, x)
    return float((c * _power_line_means(a, e, p, order)).sum() / (p + 2.0))


def _log_edge_integrals(a, e):
    """Closed-form ``int_0^1 log|a + u e| du`` per edge."""
    L = np.hypot(e[:, 0], e[:, 1])
    ehat = e / L[:, None]
    w0 = (a * ehat).sum(-1)
    w1 = w0 + L
    h = np.abs(cross2(ehat, a))

    def F(w):
        safe = np.where(h > 0, h, 1.0)
        at = np.where(h > 0, h * np.arctan(w / safe), 0.0)
        return 0.5 * xlogy(w, w * w + h * h) - w + at

    return (F(w1) - F(w0)) / L


def mu_log_value(K, x):
    """``int_K log|x - y| dy`` (integrable log singularity handled exactly)."""
    x = check_point(x, "x")
    a, e, c = _fan(K, x)
    J = _log_edge_integrals(a, e)
    return float((c * (0.5 * J - 0.25)).sum())


def _nu_edge_terms(K, x, p, order, collar):
    h = K.offsets - K.normals @ x
    if np.any(h <= collar):
        raise PointTooCloseToBoundary(
            f"x={x.tolist()} is within {collar:g} of the boundary (min distance {h.min():g})"
        )
    tangents = np.column_stack([-K.normals[:, 1], K.normals[:, 0]])
    foot = x + h[:, None] * K.normals
    ta = ((K.vertices - foot) * tangents).sum(-1)
    tb = ((np.roll(K.vertices, -1, axis=0) - foot) * tangents).sum(-1)
    psi_a, psi_b = np.arctan2(ta, h), np.arctan2(tb, h)
    # cos^(p-2) sharpens with p; this count keeps ~1e-13 up to p of a few hundred
    u, w = _gauss01(max(order, int(np.ceil(p / 3.0))) + 20)
    # split at psi = 0 where cos^(p-2) peaks
    lo = np.stack([psi_a, np.clip(0.0, psi_a, psi_b)], axis=1)
    hi = np.stack([np.clip(0.0, psi_a, psi_b), psi_b], axis=1)
    nodes = lo[..., None] + (hi - lo)[..., None] * u
    vals = np.cos(nodes) ** (p - 2.0) @ w
    integral = ((hi - lo) * vals).sum(axis=1)
    return h, integral


def _check_inverse(p):
    if not p > 2:
        raise ValueError(f"nu_p needs p > 2, got {p}")
    return float(p)


def nu_p_value(K, x, p, order=DEFAULT_ORDER, collar=None):
    """``int_{R^2 \\ K} |x - y|^-p dy`` for ``x`` interior to ``K``."""
    x = check_point(x, "x")
    p = _check_inverse(p)
    collar = 1e-9 * K.diameter if collar is None else collar
    h, integral = _nu_edge_terms(K, x, p, order, collar)
    return float((h ** (2.0 - p) * integral).sum() / (p - 2.0))


def log_nu_p_value(K, x, p, order=DEFAULT_ORDER, collar=None):
    """``log nu_p(x)`` without overflow for large ``p``."""
    x = check_point(x, "x")
    p = _check_inverse(p)
    collar = 1e-9 * K.diameter if collar is None else collar
    h, integral = _nu_edge_terms(K, x, p, order, collar)
    return float(logsumexp((2.0 - p) * np.log(h) + np.log(integral)) - np.log(p - 2.0))


def moment_value(K, x, spec):
    if spec.kind == "power":
        return mu_p_value(K, x, spec.p, spec.quadrature_order)
    if spec.kind == "inverse":
        return nu_p_value(K, x, spec.p, spec.quadrature_order)
    return mu_log_value(K, x)


def moment_gradient(K, x, spec):
    """Gradient of a moment via the divergence theorem.

    ``grad mu_phi(x) = -sum_i n_i int_{edge i} phi(|x - y|) ds`` and the
    exterior inverse moment flips the sign; the edge integrals are the same
    ones the values use.
    """
    x = check_point(x, "x")
    a, e, _ = _fan(K, x)
    L = np.hypot(e[:, 0], e[:, 1])
    if spec.kind == "power":
        line = _power_line_means(a, e, spec.p, spec.quadrature_order)
        return -(L * line) @ K.normals
    if spec.kind == "log":
        return -(L * _log_edge_integrals(a, e)) @ K.normals
    h, integral = _nu_edge_terms(K, x, spec.p, spec.quadrature_order, 0.0)
    return (h ** (1.0 - spec.p) * integral) @ K.normals


def polish_minimizer(K, x, spec, tol, steps=3):
    """Newton steps on the analytic gradient (Hessian by central differences).

    A step is kept only if it stays in ``K``, moves by less than ``100 tol``
    and shrinks the gradient, so a polished point is never worse than the
    input.
    """
    x = np.asarray(x, dtype=float)
    try:
        g = moment_gradient(K, x, spec)
    except PointTooCloseToBoundary:
        return x
    hstep = 1e-6 * K.diameter
    for _ in range(steps):
        try:
            H = np.empty((2, 2))
            for j in range(2):
                dx = np.zeros(2)
                dx[j] = hstep
                H[:, j] = (moment_gradient(K, x + dx, spec) - moment_gradient(K, x - dx, spec)) / (
                    2 * hstep
                )
            H = 0.5 * (H + H.T)
            step = np.linalg.solve(H, g)
        except (np.linalg.LinAlgError, PointTooCloseToBoundary):
            break
        if not np.all(np.isfinite(step)) or np.hypot(*step) > 100.0 * tol:
            break
        xn = x - step
        if not np.all(K.slack(xn) < 0):
            break
        try:
            gn = moment_gradient(K, xn, spec)
        except PointTooCloseToBoundary:
            break
        if np.hypot(*gn) >= np.hypot(*g):
            break
        x, g = xn, gn
    return x


def _tri_disk_area(a, b, r):
    """Signed area of ``B(0, r)`` intersected with the triangle ``(0, a, b)``."""
    d = b - a
    A = d @ d
    if A == 0.0:
        return 0.0
    B = 2.0 * (a @ d)
    C = a @ a - r * r
    disc = B * B - 4.0 * A * C
    ts = [0.0]
    if disc > 0:
        sq = np.sqrt(disc)
        for t in sorted(((-B - sq) / (2 * A), (-B + sq) / (2 * A))):
            if 0.0 < t < 1.0:
                ts.append(t)
    ts.append(1.0)
    total = 0.0
    for t0, t1 in zip(ts[:-1], ts[1:]):
        p, q = a + t0 * d, a + t1 * d
        m = a + 0.5 * (t0 + t1) * d
        cr = p[0] * q[1] - p[1] * q[0]
        if m @ m <= r * r:
            total += 0.5 * cr
        else:
            total += 0.5 * r * r * np.arctan2(cr, p @ q)
    return total


def clipped_disk_area(K, x, r):
    """Exact ``|K ∩ B(x, r)|`` by signed decomposition into edge triangles."""
    x = check_point(x, "x")
    r = check_positive(r, "r")
    V = K.vertices - x
    W = np.roll(V, -1, axis=0)
    total = sum(_tri_disk_area(a, b, r) for a, b in zip(V, W))
    return float(min(max(total, 0.0), K.area, np.pi * r * r))


def golden_section(f, a, b, xtol, max_iter=200):
    """Minimize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x), n_evals)``."""
    if b - a <= xtol:
        m = 0.5 * (a + b)
        return m, f(m), 1
    c = a + PHI * (b - a)
    d = b - PHI * (b - a)
    fc, fd = f(c), f(d)
    n = 2
    while b - a > xtol and n < max_iter:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = a + PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = b - PHI * (b - a)
            fd = f(d)
        n += 1
    return (c, fc, n) if fc <= fd else (d, fd, n)


def _chord(normals, offsets, x1):
    """y-interval of ``{y : normals @ (x1, y) <= offsets}``."""
    ny = normals[:, 1]
    rhs = offsets - normals[:, 0] * x1
    up = ny > 1e-15
    dn = ny < -1e-15
    ylo = np.max(rhs[dn] / ny[dn]) if dn.any() else -np.inf
    yhi = np.min(rhs[up] / ny[up]) if up.any() else np.inf
    return ylo, yhi


def nested_minimize(K, f, xtol, shrink=0.0):
    """Minimize ``f`` over ``K`` shrunk by ``shrink`` with nested golden sections.

    The inner search runs over the vertical chord at each trial abscissa.
    For a convex (or quasiconvex) ``f`` the partial minimum is again
    unimodal in the abscissa, so the nesting is exact up to ``xtol``.
    """
    offsets = K.offsets - shrink
    dom = offset_region(K, shrink) if shrink > 0 else K.vertices
    if len(dom) == 0:
        raise PointTooCloseToBoundary("shrunken domain is empty")
    xmin, xmax = dom[:, 0].min(), dom[:, 0].max()
    evals = 0
    best = {}

    def inner(x1):
        nonlocal evals
        ylo, yhi = _chord(K.normals, offsets, x1)
        if yhi < ylo:
            ylo = yhi = 0.5 * (ylo + yhi)
        y, fy, n = golden_section(lambda y: f(np.array([x1, y])), ylo, yhi, xtol)
        evals += n
        best[x1] = y
        return fy

    pad = 1e-12 * (xmax - xmin)
    x1, fx, n = golden_section(inner, xmin + pad, xmax - pad, xtol)
    return np.array([x1, best[x1]]), fx, evals + n


def _probe_flat(K, f, point, fval, step, rel, shrink=0.0):
    """Directions (unit vectors) along which ``f`` is constant to ``rel``."""
    flat = []
    thr = rel * max(abs(fval), 1e-300)
    # flat maximizer sets run parallel to an edge (strips), so probe those too
    fixed = np.pi * np.arange(4) / 4
    edge = np.mod(np.arctan2(K.normals[:, 0], -K.normals[:, 1]), np.pi)
    angles = np.unique(np.round(np.concatenate([fixed, edge]), 12))
    for th in angles:
        u = np.array([np.cos(th), np.sin(th)])
        # one flat side suffices: the search may stop at an end of the flat set
        for sgn in (1.0, -1.0):
            q = point + sgn * step * u
            if np.all(K.slack(q) <= -shrink) and abs(f(q) - fval) <= thr:
                flat.append(u)
                break
    return flat


def _tol(K, tol):
    return 1e-9 * K.diameter if tol is None else tol


def _minimize(K, f, tol, shrink=0.0, flat_rel=1e-10):
    tol = 1e-9 * K.diameter if tol is None else check_positive(tol, "tol")
    pt, val, n = nested_minimize(K, f, tol, shrink)
    flat = _probe_flat(K, f, pt, val, 1e-3 * K.diameter, flat_rel, shrink)
    return pt, val, bool(flat), n


def minimize_mu_p(K, p, tol=None, order=DEFAULT_ORDER):
    """Minimizer of the convex p-moment over ``K``."""
    p = check_positive(p, "p")
    # log is monotone: same minimizer, no overflow for large p
    f = lambda x: np.log(mu_p_value(K, x, p, order))  # noqa: E731
    pt, val, flat, n = _minimize(K, f, tol)
    pt = polish_minimizer(K, pt, MomentSpec("power", p, order), _tol(K, tol))
    return MinimizerResult(pt, mu_p_value(K, pt, p, order), flat, n)


def minimize_nu_p(K, p, tol=None, order=DEFAULT_ORDER):
    """Minimizer of the exterior inverse-power moment over the interior of ``K``."""
    p = _check_inverse(p)
    tol_ = 1e-9 * K.diameter if tol is None else tol
    f = lambda x: log_nu_p_value(K, x, p, order, collar=0.5 * tol_)  # noqa: E731
    pt, val, flat, n = _minimize(K, f, tol_, shrink=tol_)
    pt = polish_minimizer(K, pt, MomentSpec("inverse", p, order), tol_)
    return MinimizerResult(pt, float(np.exp(log_nu_p_value(K, pt, p, order, 0.0))), flat, n)


def minimize_mu_log(K, tol=None):
    """Minimizer of the logarithmic moment (geometric-mean distance)."""
    f = lambda x: mu_log_value(K, x)  # noqa: E731
    pt, val, flat, n = _minimize(K, f, tol)
    pt = polish_minimizer(K, pt, MomentSpec("log"), _tol(K, tol))
    return MinimizerResult(pt, mu_log_value(K, pt), flat, n)


def minimize_moment(K, spec, tol=None):
    if spec.kind == "power":
        return minimize_mu_p(K, spec.p, tol, spec.quadrature_order)
    if spec.kind == "inverse":
        return minimize_nu_p(K, spec.p, tol, spec.quadrature_order)
    return minimize_mu_log(K, tol)


def _flat_extent(K, f, point, u, fval, thr, tol):
    """Endpoints of the segment through ``point`` along ``u`` where ``f`` stays at ``fval``."""
    ends = []
    for sgn in (1.0, -1.0):
        v = sgn * u
        s = K.slack(point)[0]
        rate = K.normals @ v
        pos = rate > 0
        tmax = np.min(-s[pos] / rate[pos]) if pos.any() else K.diameter
        lo, hi = 0.0, tmax
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if abs(f(point + mid * v) - fval) <= thr:
                lo = mid
            else:
                hi = mid
        ends.append(point + lo * v)
    return ends


def maximize_gamma(K, r, tol=None):
    """Center maximizing the log-concave ``gamma(x) = |K ∩ B(x, r)|``.

    Returns ``(center, gamma_max, flat_flag)``. When the maximizer set is
    flat along some direction, the midpoint of the flat segment through the
    found maximizer is reported.
    """
    tol = 1e-9 * K.diameter if tol is None else check_positive(tol, "tol")
    r = check_positive(r, "r")

    def gamma(x):
        return clipped_disk_area(K, x, r)

    def neg_log_gamma(x):
        g = gamma(x)
        return -np.log(g) if g > 0 else np.inf

    pt, val, _ = nested_minimize(K, neg_log_gamma, tol)
    gmax = float(np.exp(-val))
    full = np.pi * r * r
    if gmax >= full * (1.0 - 1e-12):
        # the whole disk fits: the maximizers are the inner parallel body
        inner = offset_region(K, r)
        if len(inner) >= 3 and region_area(inner) > 0:
            return region_centroid(inner), full, True
        if len(inner):
            return inner.mean(axis=0), full, len(inner) > 1
    flat_dirs = _probe_flat(K, gamma, pt, gmax, 1e-3 * K.diameter, 1e-12)
    if flat_dirs:
        a, b = _flat_extent(K, gamma, pt, flat_dirs[0], gmax, 1e-12 * K.area, tol)
        pt = 0.5 * (a + b)
        gmax = gamma(pt)
    return pt, float(gmax), bool(flat_dirs)


def fraenkel_asymmetry(K, tol=None):
    """Fraenkel asymmetry ``2 (1 - max gamma / |K|)`` at the equal-area radius."""
    r_star = float(np.sqrt(K.area / np.pi))
    pt, gmax, flat = maximize_gamma(K, r_star, tol)
    return FraenkelResult(
        r_star=r_star,
        center=pt,
        gamma_max=gmax,
        asymmetry=2.0 * (1.0 - gmax / K.area),
        flat_flag=flat,
    )


def special_points(K, tol=None, mu_ps=(0.5, 1.0, 2.0, 5.0, 50.0), nu_ps=(3.0, 6.0, 40.0)):
    """Named distinguished points of ``K`` as ``(name, xy, value)`` triples."""
    disk = min_enclosing_disk(K)
    cheb = chebyshev_set(K, tol)
    out = [
        ("M_K", K.centroid, K.area),
        ("C_K", disk.center, disk.radius),
        ("I_M", cheb.centroid, cheb.inradius),
    ]
    for p in mu_ps:
        r = minimize_mu_p(K, p, tol)
        out.append((f"mu_{p:g}", r.point, r.value))
    for p in nu_ps:
        r = minimize_nu_p(K, p, tol)
        out.append((f"nu_{p:g}", r.point, r.value))
    r = minimize_mu_log(K, tol)
    out.append(("mu_log", r.point, r.value))
    fr = fraenkel_asymmetry(K, tol)
    out.append(("fraenkel", fr.center, fr.asymmetry))
    return out


__all__ = [
    "MomentSpec",
    "MinimizerResult",
    "FraenkelResult",
    "mu_p_value",
    "mu_log_value",
    "nu_p_value",
    "log_nu_p_value",
    "moment_value",
    "clipped_disk_area",
    "moment_gradient",
    "polish_minimizer",
    "minimize_mu_p",
    "minimize_nu_p",
    "minimize_mu_log",
    "minimize_moment",
    "fraenkel_asymmetry",
    "special_points",
    "maximize_gamma",
    "golden_section",
    "nested_minimize",
]
