"""Cross-checks of a computed heart against oracles and containment theorems."""

from typing import NamedTuple

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .folding import default_tol, directions, fold_values, symmetry_directions
from .geometry import hausdorff_distance
from .heart import build_heart, diameter_lower_bound
from .oracle import mc_moment, predicate_scan_folding
from .points import MomentSpec, mu_p_value, special_points
from .triangle import exact_triangle_heart


class Check(NamedTuple):
    name: str
    passed: bool
    detail: str


def _hull_vertices(pts):
    try:
        return pts[ConvexHull(pts).vertices]
    except (QhullError, ValueError):
        return pts


def run_checks(K, n_directions=720, tol=None, seed=42, n_scan=8):
    """Run every invariant on ``K``; returns a list of :class:`Check`."""
    tol = default_tol(K) if tol is None else tol
    heart = build_heart(K, n_directions, tol)
    out = []

    slack = K.slack(heart.region).max()
    out.append(Check("heart_inside_body", slack <= 10 * tol, f"max slack {slack:.3g}"))

    pts = special_points(K, tol)
    far = max((heart.distance(xy), name) for name, xy, _ in pts)
    out.append(
        Check("points_in_heart", far[0] <= 10 * tol, f"worst {far[1]} at distance {far[0]:.3g}")
    )
    hull = _hull_vertices(np.array([xy for _, xy, _ in pts]))
    hd = max(heart.distance(v) for v in hull)
    out.append(Check("hull_in_heart", hd <= 10 * tol, f"hull vertex distance {hd:.3g}"))

    lb = diameter_lower_bound(K, tol)
    out.append(
        Check("diameter_bound", heart.diameter + 10 * tol >= lb, f"{heart.diameter:.6g} vs {lb:.6g}")
    )

    fine = build_heart(K, 2 * n_directions, tol)
    gap = max(heart.distance(v) for v in fine.region)
    out.append(Check("monotone_refinement", gap <= 10 * tol, f"finer vertex outside by {gap:.3g}"))

    oms = directions(n_scan)
    r = fold_values(K, oms, tol)[0]
    worst = 0.0
    n_steps = 400
    for om, ri in zip(oms, r):
        pitch = (K.vertices @ om).max() - K.centroid @ om
        err = abs(predicate_scan_folding(K, om, n_steps, tol) - ri)
        worst = max(worst, err / (pitch / n_steps * 1.01 + 2 * tol))
    out.append(Check("folding_scan", worst <= 1.0, f"error / (pitch + tol) = {worst:.3g}"))

    spec = MomentSpec("power", 2.0)
    est, se = mc_moment(K, K.centroid, spec, 100_000, seed)
    q = mu_p_value(K, K.centroid, 2.0)
    out.append(
        Check("moment_monte_carlo", abs(est - q) <= 4 * se, f"|{q:.6g} - {est:.6g}| vs 4*{se:.3g}")
    )

    if len(K) == 3:
        ex = exact_triangle_heart(K, tol)
        d = hausdorff_distance(ex.polygon, heart.region)
        bound = max(1e-4 * K.diameter, 20 * tol)
        out.append(Check("exact_triangle", d <= bound, f"Hausdorff {d:.3g} vs {bound:.3g}"))

    for om in symmetry_directions(K, tol):
        off = np.abs(heart.region @ om - K.centroid @ om).max()
        out.append(
            Check(
                f"mirror_strip_{np.degrees(np.arctan2(om[1], om[0])):.1f}",
                off <= 10 * tol,
                f"heart extends {off:.3g} from the mirror",
            )
        )
    return out
