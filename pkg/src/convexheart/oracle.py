"""Brute-force verifiers: literal fold scans, grid hearts, Monte Carlo moments.

Nothing here uses the vectorized fold predicate or the edge quadrature; the
point is to check those against the definitions directly.
"""

import numpy as np

from .geometry import FoldAxis, clip_cap, contains_polygon, directions, reflect_point
from .points import MomentSpec
from .validation import check_direction, check_int, check_point

DEFAULT_BATCH = 100_000


def literal_admissible(K, omega, lam, tol):
    """Clip the cap, reflect it, and test containment polygon-by-polygon."""
    axis = FoldAxis(omega, float(lam))
    cap = clip_cap(K, axis)
    if cap is None:
        return True
    return contains_polygon(K, reflect_point(cap.vertices, axis), tol)


def predicate_scan_folding(K, omega, n_steps=400, tol=None, refine=False):
    """Smallest offset on an ``n_steps`` grid from which every fold is admissible.

    The grid spans ``[<M_K, omega> - delta, support]`` with ``delta`` one grid
    pitch. With ``refine`` the bracket below the result is bisected with the
    same literal predicate down to ``tol``.
    """
    omega = check_direction(omega)
    n = check_int(n_steps, "n_steps", 100)
    tol = 1e-9 * K.diameter if tol is None else float(tol)
    lo = float(K.centroid @ omega)
    hi = float((K.vertices @ omega).max())
    delta = (hi - lo) / n
    grid = np.linspace(lo - delta, hi, n + 1)
    ok = np.array([literal_admissible(K, omega, lam, tol) for lam in grid])
    bad = np.flatnonzero(~ok)
    k = 0 if len(bad) == 0 else bad[-1] + 1
    if not refine or k == 0:
        return float(grid[k])
    a, b = grid[k - 1], grid[k]
    while b - a > tol:
        m = 0.5 * (a + b)
        if literal_admissible(K, omega, m, tol):
            b = m
        else:
            a = m
    return float(b)


def grid_heart_oracle(K, grid_res=64, n_dirs=360, n_steps=100, tol=None):
    """Grid nodes of ``K`` satisfying every sampled folding inequality.

    Nodes form a ``(grid_res + 1)``-per-side lattice over the bounding box.
    Returns an ``(m, 2)`` array plus the cell size.
    """
    res = check_int(grid_res, "grid_res", 32)
    tol = 1e-9 * K.diameter if tol is None else float(tol)
    oms = directions(check_int(n_dirs, "n_dirs", 4))
    R = np.array([predicate_scan_folding(K, om, n_steps, tol, refine=True) for om in oms])
    lo, hi = K.vertices.min(axis=0), K.vertices.max(axis=0)
    xs = np.linspace(lo[0], hi[0], res + 1)
    ys = np.linspace(lo[1], hi[1], res + 1)
    X, Y = np.meshgrid(xs, ys)
    pts = np.column_stack([X.ravel(), Y.ravel()])
    slack = 10.0 * tol
    inside = K.contains_points(pts, slack)
    inside &= np.all(pts @ oms.T <= R[None, :] + slack, axis=1)
    return pts[inside], np.array([xs[1] - xs[0], ys[1] - ys[0]])


def _batches(n_samples, batch):
    sizes = [batch] * (n_samples // batch)
    if n_samples % batch:
        sizes.append(n_samples % batch)
    return sizes


def mc_moment(K, x, spec, n_samples=100_000, seed=42, batch=DEFAULT_BATCH):
    """Monte Carlo estimate and standard error of a moment at ``x``.

    Power and log moments sample the bounding box uniformly and reject points
    outside ``K``. Inverse moments integrate over the complement of ``K``:
    the radius about ``x`` is drawn with density proportional to
    ``r^(1-p)`` beyond the distance to the nearest edge line, which turns the
    integrand into a constant times the indicator of leaving ``K``.
    """
    if not isinstance(spec, MomentSpec):
        raise TypeError("spec must be a MomentSpec")
    x = check_point(x, "x")
    n = check_int(n_samples, "n_samples", 10_000)
    children = np.random.SeedSequence(seed).spawn(len(_batches(n, batch)))
    vals = []
    for size, child in zip(_batches(n, batch), children):
        rng = np.random.default_rng(child)
        vals.append(_mc_batch(K, x, spec, size, rng))
    vals = np.concatenate(vals)
    return float(vals.mean()), float(vals.std(ddof=1) / np.sqrt(len(vals)))


def _mc_batch(K, x, spec, size, rng):
    if spec.kind == "inverse":
        p = spec.p
        h0 = float((K.offsets - K.normals @ x).min())
        if h0 <= 0:
            raise ValueError("x must be interior for inverse moments")
        # Pareto radius: P(r > s) = (s / h0)^(2 - p)
        r = h0 * rng.random(size) ** (-1.0 / (p - 2.0))
        th = rng.uniform(0.0, 2.0 * np.pi, size)
        y = x + r[:, None] * np.column_stack([np.cos(th), np.sin(th)])
        outside = ~K.contains_points(y, 0.0)
        return outside * (2.0 * np.pi * h0 ** (2.0 - p) / (p - 2.0))
    lo, hi = K.vertices.min(axis=0), K.vertices.max(axis=0)
    y = lo + (hi - lo) * rng.random((size, 2))
    inside = K.contains_points(y, 0.0)
    d = np.hypot(*(y - x).T)
    if spec.kind == "power":
        f = d**spec.p
    else:
        f = np.log(np.where(d > 0, d, 1.0))
    return np.where(inside, f, 0.0) * np.prod(hi - lo)
