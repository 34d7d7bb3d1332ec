"""scikit-learn style wrappers: ``fit`` takes the polygon vertices.

Each estimator canonicalizes ``X`` (an ``(n, 2)`` vertex array in any order)
into a convex polygon on ``fit``; ``transform`` / ``predict`` then act on
query points.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .geometry import make_polygon, sort_ccw
from .heart import build_heart
from .points import (
    DEFAULT_ORDER,
    MomentSpec,
    clipped_disk_area,
    fraenkel_asymmetry,
    minimize_moment,
    moment_value,
)
from .validation import check_points, check_positive


def _fit_body(X):
    return make_polygon(sort_ccw(check_points(X, min_points=3, name="X")))


class HeartEstimator(TransformerMixin, BaseEstimator):
    """Heart of the polygon passed to ``fit``.

    ``transform`` returns the distance of each query point to the heart and
    ``predict`` the membership within ``10 * tol``.
    """

    def __init__(self, n_directions=720, tol=1e-9, refine=False, cuts=True):
        self.n_directions = n_directions
        self.tol = tol
        self.refine = refine
        self.cuts = cuts

    def fit(self, X, y=None):
        check_positive(self.tol, "tol")
        self.body_ = _fit_body(X)
        self.heart_ = build_heart(
            self.body_,
            self.n_directions,
            self.tol * self.body_.diameter,
            refine=self.refine,
            cuts=self.cuts,
        )
        self.region_ = self.heart_.region
        self.area_ = self.heart_.area
        self.dimension_ = self.heart_.dimension
        return self

    def transform(self, X):
        check_is_fitted(self, "heart_")
        pts = check_points(X, min_points=1, name="X")
        return np.array([self.heart_.distance(p) for p in pts])

    def predict(self, X):
        return self.transform(X) <= 10.0 * self.heart_.tol


class MomentMinimizer(TransformerMixin, BaseEstimator):
    """Minimizer of a power, inverse-power or logarithmic moment.

    ``transform`` evaluates the moment at query points.
    """

    def __init__(self, kind="power", p=2.0, tol=1e-9, quadrature_order=DEFAULT_ORDER):
        self.kind = kind
        self.p = p
        self.tol = tol
        self.quadrature_order = quadrature_order

    def _spec(self):
        p = None if self.kind == "log" else self.p
        return MomentSpec(self.kind, p, self.quadrature_order)

    def fit(self, X, y=None):
        check_positive(self.tol, "tol")
        self.body_ = _fit_body(X)
        res = minimize_moment(self.body_, self._spec(), self.tol * self.body_.diameter)
        self.point_ = res.point
        self.value_ = res.value
        self.flat_flag_ = res.flat_flag
        return self

    def transform(self, X):
        check_is_fitted(self, "point_")
        spec = self._spec()
        pts = check_points(X, min_points=1, name="X")
        return np.array([moment_value(self.body_, p, spec) for p in pts])


class FraenkelEstimator(TransformerMixin, BaseEstimator):
    """Fraenkel asymmetry; ``transform`` gives the clipped-disk area at query centers."""

    def __init__(self, tol=1e-9):
        self.tol = tol

    def fit(self, X, y=None):
        check_positive(self.tol, "tol")
        self.body_ = _fit_body(X)
        res = fraenkel_asymmetry(self.body_, self.tol * self.body_.diameter)
        self.center_ = res.center
        self.asymmetry_ = res.asymmetry
        self.r_star_ = res.r_star
        self.gamma_max_ = res.gamma_max
        self.flat_flag_ = res.flat_flag
        return self

    def transform(self, X):
        check_is_fitted(self, "center_")
        pts = check_points(X, min_points=1, name="X")
        return np.array([clipped_disk_area(self.body_, p, self.r_star_) for p in pts])
