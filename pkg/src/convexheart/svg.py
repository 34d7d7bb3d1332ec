"""SVG pictures of a body, its heart and its distinguished points."""

from xml.sax.saxutils import escape

import numpy as np

PAD = 0.05


def _coords(pts):
    # SVG y grows downward; flip so pictures read like plots
    return " ".join(f"{x:.9g},{-y:.9g}" for x, y in pts)


def render_svg(K, heart=None, points=(), path=None):
    """Draw ``K`` with layers ``body``, ``heart`` and ``points``.

    ``heart`` is a region array (1, 2 or more vertices) or an object with a
    ``region`` attribute. ``points`` holds ``(name, xy)`` or
    ``(name, xy, value)`` tuples. Returns the SVG text and writes it to
    ``path`` when given.
    """
    V = K.vertices
    lo, hi = V.min(axis=0), V.max(axis=0)
    span = hi - lo
    pad = PAD * span
    x0, y0 = lo[0] - pad[0], -(hi[1] + pad[1])
    w, h = span[0] + 2 * pad[0], span[1] + 2 * pad[1]
    unit = 0.01 * max(w, h)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{x0:.9g} {y0:.9g} {w:.9g} {h:.9g}" width="640" height="{640 * h / w:.0f}">',
        f'<g id="body" fill="none" stroke="black" stroke-width="{0.3 * unit:.6g}">',
        f'<polygon points="{_coords(V)}"/>',
        "</g>",
    ]
    region = getattr(heart, "region", heart)
    out.append(f'<g id="heart" fill="#d33" fill-opacity="0.5" stroke="#a00" stroke-width="{0.3 * unit:.6g}">')
    if region is not None:
        region = np.atleast_2d(region)
        if len(region) == 1:
            x, y = region[0]
            out.append(f'<circle cx="{x:.9g}" cy="{-y:.9g}" r="{unit:.6g}"/>')
        elif len(region) == 2:
            out.append(f'<polyline fill="none" points="{_coords(region)}"/>')
        else:
            out.append(f'<polygon points="{_coords(region)}"/>')
    out.append("</g>")
    out.append(f'<g id="points" font-size="{2.5 * unit:.6g}" font-family="sans-serif">')
    for entry in points:
        name, xy = entry[0], np.asarray(entry[1], dtype=float)
        out.append(
            f'<circle cx="{xy[0]:.9g}" cy="{-xy[1]:.9g}" r="{0.6 * unit:.6g}" fill="#14c">'
            f"<title>{escape(name)}</title></circle>"
        )
        out.append(f'<text x="{xy[0] + unit:.9g}" y="{-xy[1] - unit:.9g}">{escape(name)}</text>')
    out.append("</g>")
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
