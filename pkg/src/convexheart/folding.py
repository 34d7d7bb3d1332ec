"""Maximal folding function and mirror-symmetry detection.

For a fold line ``<x, omega> = lam`` the cap of a convex polygon is the hull
of the polygon vertices with ``<v, omega> >= lam`` and the two chord
endpoints. The chord endpoints lie on the line and on the boundary, so they
are fixed by the reflection and always contained; the reflected cap is
therefore inside ``K`` iff every reflected cap vertex is. That is the check
:func:`fold_violation` evaluates, batched over many (direction, offset)
pairs at once.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exceptions import MonotonicityViolation
from .geometry import FoldAxis, contains_polygon, directions, reflect_point
from .validation import check_direction, check_int, check_positive

N_PRESCAN = 64
N_FALLBACK_SCAN = 4096
# containment slack used during the search, as a fraction of the bisection
# width; a slack of s biases R down by up to s / (2 |<omega, n_i>|)
SLACK_FRACTION = 1e-3
_CHUNK_ELEMENTS = 2_000_000


def default_tol(K):
    return 1e-9 * K.diameter


def fold_violation(K, omegas, lams):
    """Largest edge slack of any reflected cap vertex.

    ``omegas`` has shape ``(m, 2)`` and ``lams`` shape ``(m,)`` or
    ``(m, k)``; the result has the shape of ``lams``. Values ``<= tol`` mean
    the fold is admissible at slack ``tol``. An empty cap yields ``-inf``.
    """
    V, N, C = K.vertices, K.normals, K.offsets
    omegas = np.atleast_2d(omegas)
    lams = np.asarray(lams, dtype=float)
    squeeze = lams.ndim == 1
    if squeeze:
        lams = lams[:, None]
    s = omegas @ V.T  # (m, n)
    a = V @ N.T - C  # (n, e)
    b = omegas @ N.T  # (m, e)
    lam = lams[:, :, None, None]
    viol = a[None, None] + 2.0 * (lam - s[:, None, :, None]) * b[:, None, None, :]
    viol = viol.max(axis=3)
    viol = np.where(s[:, None, :] >= lams[:, :, None], viol, -np.inf)
    out = viol.max(axis=2)
    return out[:, 0] if squeeze else out


def is_admissible_fold(K, axis, tol=None):
    """True iff reflecting the cap beyond ``axis`` lands inside ``K``."""
    tol = default_tol(K) if tol is None else check_positive(tol, "tol", strict=False)
    omega = check_direction(axis.omega)
    return bool(fold_violation(K, omega[None, :], np.array([axis.lam]))[0] <= tol)


@dataclass(frozen=True)
class FoldingSample:
    omega: np.ndarray
    r_value: float
    bracket_width: float
    admissible_at_r_plus: bool
    monotone: bool = True

    @property
    def angle(self):
        return float(np.mod(np.arctan2(self.omega[1], self.omega[0]), 2.0 * np.pi))


@dataclass(frozen=True)
class FoldingProfile:
    samples: list
    tol: float

    def __len__(self):
        return len(self.samples)

    @property
    def omegas(self):
        return np.array([s.omega for s in self.samples])

    @property
    def angles(self):
        return np.array([s.angle for s in self.samples])

    @property
    def values(self):
        return np.array([s.r_value for s in self.samples])

    def to_dict(self):
        return {
            "tol": self.tol,
            "samples": [
                {"angle": s.angle, "r": s.r_value, "bracket": s.bracket_width}
                for s in self.samples
            ],
        }


def _bisect(K, omegas, lo, hi, tol, slack):
    lo, hi = lo.copy(), hi.copy()
    active = hi - lo > tol
    while active.any():
        idx = np.flatnonzero(active)
        mid = 0.5 * (lo[idx] + hi[idx])
        ok = fold_violation(K, omegas[idx], mid) <= slack
        hi[idx[ok]] = mid[ok]
        lo[idx[~ok]] = mid[~ok]
        active = hi - lo > tol
    return lo, hi


def _scan_brackets(K, omegas, lo, hi, n, slack):
    """Admissibility on an ``n``-point grid per direction."""
    frac = np.linspace(0.0, 1.0, n)
    grid = lo[:, None] + (hi - lo)[:, None] * frac[None, :]
    ok = fold_violation(K, omegas, grid) <= slack
    ok[:, -1] = True
    return grid, ok


def _fold_batch(K, omegas, tol, slack, fallback):
    M = K.centroid
    lo0 = omegas @ M
    hi0 = (omegas @ K.vertices.T).max(axis=1)
    # centroid projection can exceed the support by rounding on thin bodies
    lo0 = np.minimum(lo0, hi0)
    grid, ok = _scan_brackets(K, omegas, lo0, hi0, N_PRESCAN, slack)
    monotone = ~np.any(ok[:, :-1] & ~ok[:, 1:], axis=1)
    if not monotone.all() and not fallback:
        bad = np.flatnonzero(~monotone)[0]
        raise MonotonicityViolation(
            f"admissible offset below an inadmissible one for omega={omegas[bad].tolist()}"
        )
    first = np.argmax(ok, axis=1)
    rows = np.arange(len(omegas))
    lo = np.where(first > 0, grid[rows, np.maximum(first - 1, 0)], lo0)
    hi = grid[rows, first]
    bad = np.flatnonzero(~monotone)
    if len(bad):
        g2, ok2 = _scan_brackets(K, omegas[bad], lo0[bad], hi0[bad], N_FALLBACK_SCAN, slack)
        f2 = np.argmax(ok2, axis=1)
        r2 = np.arange(len(bad))
        lo[bad] = np.where(f2 > 0, g2[r2, np.maximum(f2 - 1, 0)], lo0[bad])
        hi[bad] = g2[r2, f2]
        first[bad] = f2
    at_lo = first == 0
    lo[at_lo] = hi[at_lo]
    lo, hi = _bisect(K, omegas, lo, hi, tol, slack)
    certified = fold_violation(K, omegas, hi) <= slack
    below_ok = np.where(at_lo, False, fold_violation(K, omegas, lo) <= slack)
    if np.any(below_ok & monotone):
        raise MonotonicityViolation("bisection bracket lost its lower certificate")
    return hi, hi - lo, certified, monotone


def _chunks(m, per_row):
    step = max(1, _CHUNK_ELEMENTS // max(per_row, 1))
    return [slice(i, min(i + step, m)) for i in range(0, m, step)]


def thread_cap():
    """Worker count honoring ``HEART_THREADS`` (default: all CPUs)."""
    env = os.environ.get("HEART_THREADS")
    n = os.cpu_count() or 1
    if env:
        try:
            n = min(n, max(1, int(env)))
        except ValueError:
            pass
    return n


def fold_values(K, omegas, tol=None, slack=None, fallback=True, n_jobs=None):
    """Vectorized maximal folding for each row of ``omegas``.

    Returns ``(r, bracket, certified, monotone)`` arrays.
    """
    tol = default_tol(K) if tol is None else check_positive(tol, "tol")
    slack = SLACK_FRACTION * tol if slack is None else slack
    omegas = np.atleast_2d(np.asarray(omegas, dtype=float))
    per_row = N_PRESCAN * len(K) * len(K)
    parts = _chunks(len(omegas), per_row)
    workers = min(thread_cap() if n_jobs is None else n_jobs, len(parts))

    def run(sl):
        return _fold_batch(K, omegas[sl], tol, slack, fallback)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(run, parts))
    else:
        results = [run(sl) for sl in parts]
    return tuple(np.concatenate([r[i] for r in results]) for i in range(4))


def maximal_folding(K, omega, tol=None, fallback=True):
    """Smallest admissible fold offset in direction ``omega`` (bisection).

    The search runs over ``[<M_K, omega>, support(K, omega)]``; a 64-point
    pre-scan checks that the predicate is monotone first. With
    ``fallback=False`` a non-monotone scan raises
    :class:`MonotonicityViolation` instead of switching to a 4096-point scan.
    """
    omega = check_direction(omega)
    tol = default_tol(K) if tol is None else check_positive(tol, "tol")
    r, w, cert, mono = fold_values(K, omega[None, :], tol, fallback=fallback, n_jobs=1)
    return FoldingSample(omega, float(r[0]), float(w[0]), bool(cert[0]), bool(mono[0]))


def folding_profile(K, n_directions=720, tol=None, n_jobs=None):
    """Sample the maximal folding function at ``n_directions`` equispaced angles."""
    n = check_int(n_directions, "n_directions", 4)
    tol = default_tol(K) if tol is None else check_positive(tol, "tol")
    return profile_at(K, directions(n), tol, n_jobs=n_jobs)


def profile_at(K, omegas, tol=None, n_jobs=None):
    tol = default_tol(K) if tol is None else tol
    r, w, cert, mono = fold_values(K, omegas, tol, n_jobs=n_jobs)
    samples = [
        FoldingSample(om, float(ri), float(wi), bool(ci), bool(mi))
        for om, ri, wi, ci, mi in zip(omegas, r, w, cert, mono)
    ]
    return FoldingProfile(samples, tol)


def detect_symmetry(K, omega, tol=None):
    """Is ``K`` mirror symmetric across the line through ``M_K`` normal to ``omega``?"""
    omega = check_direction(omega)
    tol = default_tol(K) if tol is None else check_positive(tol, "tol", strict=False)
    axis = FoldAxis(omega, float(K.centroid @ omega))
    return contains_polygon(K, reflect_point(K.vertices, axis), tol)


def symmetry_directions(K, tol=None, n_candidates=None):
    """Directions (mod pi) along which ``K`` is mirror symmetric.

    Candidate mirror normals are edge normals and the normals of lines
    joining the centroid to a vertex or an edge midpoint, which covers every
    mirror of a polygon.
    """
    tol = default_tol(K) if tol is None else tol
    V = K.vertices
    M = K.centroid
    mids = 0.5 * (V + np.roll(V, -1, axis=0))
    cands = [K.normals]
    for P in (V, mids):
        d = P - M
        cands.append(np.column_stack([-d[:, 1], d[:, 0]]))
    cands = np.concatenate(cands)
    norms = np.hypot(cands[:, 0], cands[:, 1])
    cands = cands[norms > 0] / norms[norms > 0, None]
    found = []
    for om in cands:
        if om[1] < 0 or (om[1] == 0 and om[0] < 0):
            om = -om
        if any(abs(f[0] * om[1] - f[1] * om[0]) < 1e-9 for f in found):
            continue
        if detect_symmetry(K, om, 10 * tol):
            found.append(om)
    return found
