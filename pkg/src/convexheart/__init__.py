"""Hearts of planar convex polygons and the points that live in them."""

from .estimators import FraenkelEstimator, HeartEstimator, MomentMinimizer
from .exceptions import (
    Degenerate,
    DegenerateTriangle,
    HeartError,
    InternalError,
    InvalidPolygon,
    MonotonicityViolation,
    NotConvex,
    NotObtuseConfiguration,
    ParseError,
    PointTooCloseToBoundary,
    TooFewVertices,
)
from .folding import (
    FoldingProfile,
    FoldingSample,
    detect_symmetry,
    fold_violation,
    folding_profile,
    is_admissible_fold,
    maximal_folding,
    symmetry_directions,
)
from .geometry import (
    ChebyshevSet,
    ConvexPolygon,
    Disk,
    FoldAxis,
    area_centroid,
    chebyshev_set,
    clip_cap,
    contains_polygon,
    hausdorff_distance,
    make_polygon,
    min_enclosing_disk,
    reflect_point,
    support,
)
from .heart import HeartResult, build_heart, diameter_lower_bound, distinguished_centers, heart_dimension
from .io import load_body, parse_body
from .oracle import grid_heart_oracle, mc_moment, predicate_scan_folding
from .points import (
    FraenkelResult,
    MinimizerResult,
    MomentSpec,
    clipped_disk_area,
    fraenkel_asymmetry,
    maximize_gamma,
    minimize_moment,
    minimize_mu_log,
    minimize_mu_p,
    minimize_nu_p,
    moment_gradient,
    moment_value,
    mu_log_value,
    mu_p_value,
    nu_p_value,
    special_points,
)
from .svg import render_svg
from .triangle import (
    TriangleGeometry,
    classify_triangle,
    exact_triangle_heart,
    obtuse_sweep,
    triangle_area_formulas,
)

__version__ = "0.1.0"
