"""Outer approximation of the heart by intersecting folding half-planes."""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import InternalError
from .folding import default_tol, folding_profile, profile_at, symmetry_directions
from .geometry import (
    chebyshev_set,
    clip_halfplane,
    direction,
    min_enclosing_disk,
    region_area,
    region_clean,
    region_diameter,
    region_distance,
)
from .validation import check_int, check_positive

N_REFINE_JUMPS = 8
N_CUT_ROUNDS = 6
N_CUT_SAMPLES = 33


@dataclass(frozen=True)
class HeartResult:
    """Outer-approximating region of the heart.

    ``region`` holds one vertex (a point), two (a segment) or a CCW polygon.
    ``area_refined`` is the area obtained with twice as many directions when
    it was requested, so callers can gauge convergence.
    """

    region: np.ndarray
    area: float
    diameter: float
    dimension: int
    n_directions: int
    tol: float
    body_diameter: float
    profile: object = field(repr=False, default=None)
    area_refined: float = None

    def distance(self, point):
        return region_distance(point, self.region)

    def contains(self, point, tol=None):
        tol = 10.0 * self.tol if tol is None else tol
        return self.distance(point) <= tol

    def to_dict(self):
        out = {
            "vertices": self.region.tolist(),
            "area": self.area,
            "diameter": self.diameter,
            "dimension": self.dimension,
            "n_directions": self.n_directions,
            "tol": self.tol,
        }
        if self.area_refined is not None:
            out["area_refined"] = self.area_refined
        return out


def intersect_halfplanes(K, omegas, values, tol):
    """``K`` clipped by ``<x, omega_i> <= values_i`` for every i."""
    region = K.vertices
    for om, r in zip(omegas, values):
        region = clip_halfplane(region, om, r, eps=1e-3 * tol)
        if len(region) == 0:
            raise InternalError("heart intersection became empty")
        if len(region) > 8:
            region = region_clean(region, 1e-3 * tol)
    return region_clean(region, 1e-3 * tol)


def _dimension(region, tol):
    dim_tol = 100.0 * tol
    diam = region_diameter(region)
    if diam < dim_tol:
        return 0
    if region_area(region) < dim_tol * diam:
        return 1
    return 2


def _collapse(region, dim):
    if dim == 0:
        return region.mean(axis=0)[None, :]
    if dim == 1:
        d = region[:, None, :] - region[None, :, :]
        i, j = np.unravel_index(np.argmax((d**2).sum(-1)), d.shape[:2])
        return np.array([region[i], region[j]])
    return region


def _refinement_angles(profile, n):
    """Two extra angles around each of the largest profile jumps."""
    r = profile.values
    jumps = np.abs(np.roll(r, -1) - r) + np.abs(r - np.roll(r, 1))
    worst = np.argsort(jumps)[::-1][:N_REFINE_JUMPS]
    pitch = 2.0 * np.pi / n
    theta = profile.angles[worst]
    return np.concatenate([theta - pitch / 4.0, theta + pitch / 4.0])


def _active(region, omegas, values, tol):
    """Indices of constraints that touch ``region`` within ``tol``."""
    g = (region @ omegas.T).max(axis=0) - values
    return np.flatnonzero(g >= -tol)


def cutting_plane_pass(K, omegas, values, tol, rounds=N_CUT_ROUNDS, n_jobs=None):
    """Add the most violated folding half-planes near each active direction.

    ``R_K`` has narrow downward spikes (at angle-bisector and side-axis
    directions, for instance) that equispaced samples straddle. Each round
    resamples a window around every active direction, keeps the directions
    whose half-plane cuts the current region, and shrinks the window by the
    sample count.
    """
    region = intersect_halfplanes(K, omegas, values, tol)
    n = len(omegas)
    half = np.full(n, 4.0 * np.pi / max(n, 1))
    centers = np.arctan2(omegas[:, 1], omegas[:, 0])
    idx = _active(region, omegas, values, tol)
    theta, width = centers[idx], half[idx]
    frac = np.linspace(-1.0, 1.0, N_CUT_SAMPLES)
    for _ in range(rounds):
        if len(theta) == 0:
            break
        grid = (theta[:, None] + width[:, None] * frac[None, :]).ravel()
        om = np.column_stack([np.cos(grid), np.sin(grid)])
        prof = profile_at(K, om, tol, n_jobs=n_jobs)
        r = prof.values
        gain = (region @ om.T).max(axis=0) - r
        gain = gain.reshape(len(theta), N_CUT_SAMPLES)
        padded = np.pad(gain, ((0, 0), (1, 1)), constant_values=-np.inf)
        # near-zero peaks keep zooming: a spike can hide just past an active sample
        peak = (gain >= padded[:, :-2]) & (gain >= padded[:, 2:]) & (gain > -tol)
        if not peak.any():
            break
        rows, cols = np.nonzero(peak)
        pick = rows * N_CUT_SAMPLES + cols
        # overlapping windows find the same spike; keep one sample per spot
        pick = pick[np.unique(np.round(grid[pick] / (width[rows] * 1e-3)), return_index=True)[1]]
        rows = pick // N_CUT_SAMPLES
        cut = pick[gain.ravel()[pick] > tol]
        if len(cut):
            omegas = np.concatenate([omegas, om[cut]])
            values = np.concatenate([values, r[cut]])
            region = intersect_halfplanes(K, omegas, values, tol)
        theta = grid[pick]
        width = width[rows] * 2.0 / (N_CUT_SAMPLES - 1)
    return omegas, values, region


def _with_mirrors(K, omegas, values, tol, n_jobs):
    """Append both normals of every mirror line of ``K``.

    At a mirror normal ``R_K`` drops to ``<M_K, omega>`` at that single
    direction only, so no amount of nearby sampling recovers the cut.
    """
    mirrors = symmetry_directions(K, tol)
    if not mirrors:
        return omegas, values
    extra = np.concatenate([np.array(mirrors), -np.array(mirrors)])
    prof = profile_at(K, extra, tol, n_jobs=n_jobs)
    return np.concatenate([omegas, prof.omegas]), np.concatenate([values, prof.values])


def build_heart(
    K,
    n_directions=720,
    tol=None,
    refine=False,
    cuts=True,
    mirrors=True,
    convergence=False,
    n_jobs=None,
):
    """Intersect ``K`` with the folding half-planes of ``n_directions`` samples.

    The result is an outer approximation of the heart. With ``refine`` two
    directions are added next to each of the 8 largest profile jumps. With
    ``cuts`` a cutting-plane pass (:func:`cutting_plane_pass`) adds the
    deepest half-planes found near the active directions. With ``mirrors``
    the normals of detected mirror lines are sampled as well. With
    ``convergence`` the area at ``2 * n_directions`` is also reported.
    """
    n = check_int(n_directions, "n_directions", 8)
    tol = default_tol(K) if tol is None else check_positive(tol, "tol")
    profile = folding_profile(K, n, tol, n_jobs=n_jobs)
    omegas, values = profile.omegas, profile.values
    if refine:
        extra = _refinement_angles(profile, n)
        ex_om = np.array([direction(a) for a in extra])
        extra_profile = profile_at(K, ex_om, tol, n_jobs=n_jobs)
        omegas = np.concatenate([omegas, extra_profile.omegas])
        values = np.concatenate([values, extra_profile.values])
    if mirrors:
        omegas, values = _with_mirrors(K, omegas, values, tol, n_jobs)
    if cuts:
        omegas, values, region = cutting_plane_pass(K, omegas, values, tol, n_jobs=n_jobs)
    else:
        region = intersect_halfplanes(K, omegas, values, tol)
    dim = _dimension(region, tol)
    region = _collapse(region, dim)
    area_refined = None
    if convergence:
        fine = folding_profile(K, 2 * n, tol, n_jobs=n_jobs)
        fom, fval = fine.omegas, fine.values
        if mirrors:
            fom, fval = _with_mirrors(K, fom, fval, tol, n_jobs)
        if cuts:
            fine_region = cutting_plane_pass(K, fom, fval, tol, n_jobs=n_jobs)[2]
        else:
            fine_region = intersect_halfplanes(K, fom, fval, tol)
        area_refined = region_area(fine_region)
    return HeartResult(
        region=region,
        area=region_area(region),
        diameter=region_diameter(region),
        dimension=dim,
        n_directions=len(omegas),
        tol=tol,
        body_diameter=K.diameter,
        profile=profile,
        area_refined=area_refined,
    )


def heart_dimension(h):
    """0, 1 or 2 from the diameter/area ladder with ``dim_tol = 100 * tol``."""
    return _dimension(h.region, h.tol)


def distinguished_centers(K, tol=None):
    """Return ``(M_K, C_K, I_M)``."""
    return K.centroid, min_enclosing_disk(K).center, chebyshev_set(K, tol).centroid


def diameter_lower_bound(K, tol=None):
    """Largest pairwise distance among centroid, circumcenter and incenter-set centroid."""
    M, C, I = distinguished_centers(K, tol)
    return float(max(np.hypot(*(M - C)), np.hypot(*(C - I)), np.hypot(*(I - M))))
