"""Input validation helpers.

Thin wrappers around :func:`sklearn.utils.check_array` so that every public
entry point accepts lists, tuples or arrays and rejects NaN/inf early.
"""

import numbers

import numpy as np
from sklearn.utils import check_array


def check_points(points, *, min_points=1, name="points"):
    """Return ``points`` as a float ``(n, 2)`` array of finite coordinates."""
    arr = check_array(
        np.atleast_2d(np.asarray(points, dtype=float)),
        dtype=np.float64,
        ensure_2d=True,
        ensure_min_samples=min_points,
        ensure_all_finite=True,
        input_name=name,
    )
    if arr.shape[1] != 2:
        raise ValueError(f"{name} must have shape (n, 2), got {arr.shape}")
    return arr


def check_point(point, name="point"):
    """Return a single finite 2-vector."""
    arr = np.asarray(point, dtype=float).reshape(-1)
    if arr.shape != (2,):
        raise ValueError(f"{name} must be a 2-vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def check_direction(omega, name="omega"):
    """Return a unit 2-vector; rejects the zero vector."""
    arr = check_point(omega, name)
    norm = np.hypot(arr[0], arr[1])
    if norm == 0.0:
        raise ValueError(f"{name} must be nonzero")
    return arr / norm


def check_positive(value, name, *, strict=True, allow_none=False):
    if value is None and allow_none:
        return None
    if not isinstance(value, numbers.Real) or not np.isfinite(value):
        raise ValueError(f"{name} must be a finite real number, got {value!r}")
    if strict and value <= 0:
        raise ValueError(f"{name} must be > 0, got {value}")
    if not strict and value < 0:
        raise ValueError(f"{name} must be >= 0, got {value}")
    return float(value)


def check_int(value, name, minimum):
    if not isinstance(value, numbers.Integral) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)
