"""Polygon files and the JSON / CSV result formats."""

import csv
import json
import math
import sys

import numpy as np

from .exceptions import ParseError, TooFewVertices
from .geometry import make_polygon, sort_ccw


def parse_body(obj):
    """Polygon from a decoded ``{"vertices": [[x, y], ...]}`` object."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise ParseError('expected a JSON object with a "vertices" array')
    raw = obj["vertices"]
    if not isinstance(raw, list):
        raise ParseError('"vertices" must be an array of [x, y] pairs')
    pts = []
    for i, v in enumerate(raw):
        ok = (
            isinstance(v, (list, tuple))
            and len(v) == 2
            and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)
        )
        if not ok or not all(math.isfinite(c) for c in v):
            raise ParseError(f"vertex {i} is not a pair of finite numbers: {v!r}")
        pts.append((float(v[0]), float(v[1])))
    if len(pts) < 3:
        raise TooFewVertices(f"need at least 3 vertices, got {len(pts)}")
    return make_polygon(sort_ccw(np.array(pts)))


def load_body(path):
    """Read and canonicalize a polygon file."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return parse_body(obj)


def body_to_dict(K):
    return {"vertices": K.vertices.tolist()}


def dump_body(K, path):
    write_json(body_to_dict(K), path)


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    return obj


def write_json(obj, path=None):
    """Write ``obj`` as JSON to ``path`` or to standard output."""
    text = json.dumps(_plain(obj), indent=2)
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def special_points_to_list(points, heart):
    return [
        {"name": name, "xy": list(map(float, xy)), "value": float(value), "in_heart": heart.contains(xy)}
        for name, xy, value in points
    ]


def fraenkel_to_dict(res):
    return {
        "r_star": res.r_star,
        "center": res.center.tolist(),
        "gamma_max": res.gamma_max,
        "asymmetry": res.asymmetry,
        "flat_flag": res.flat_flag,
    }


def write_sweep_csv(rows, path=None):
    """CSV with header ``t,ratio,delh_ratio``."""
    fh = sys.stdout if path is None or path == "-" else open(path, "w", newline="", encoding="utf-8")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "ratio", "delh_ratio"])
        for r in rows:
            w.writerow([repr(float(r.t)), repr(float(r.ratio)), repr(float(r.delh_ratio))])
    finally:
        if fh is not sys.stdout:
            fh.close()


def read_sweep_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return [{k: float(v) for k, v in row.items()} for row in csv.DictReader(fh)]
