"""Static SVG and DOT emitters.

All geometry is exact until the final digit formatting: coordinates are
clipped and intersected as Fractions, then printed at fixed decimal
precision.  Display rounding never feeds back into any computation.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import BLACK, WHITE, Arrangement, Coloring, DualGraph
from .errors import ChartDegenerate

PRECISION = 4
_FILL = {BLACK: "#b0b0b0", WHITE: "#ffffff"}


def _fmt(x: Fraction) -> str:
    scaled = round(Fraction(x) * 10 ** PRECISION)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10 ** PRECISION)
    return f"{sign}{whole}.{str(frac).zfill(PRECISION)}"


def _chart_index(arr: Arrangement, chart):
    names = {"z": 2, "x": 0, "y": 1}
    axes = [names[chart]] if chart in names else [2, 0, 1]
    if chart not in names and chart != "auto":
        raise ChartDegenerate(f"unknown chart {chart!r}")

    def line_at_infinity(c):
        return any(all(l.coeffs[k] == 0 for k in range(3) if k != c)
                   for l in arr.lines)

    def vertex_at_infinity(c):
        return any(v.point.coords[c] == 0 for v in arr.vertices)

    usable = [c for c in axes if not line_at_infinity(c)]
    if not usable:
        raise ChartDegenerate("every chart axis hides a line at infinity")
    for c in usable:
        if not vertex_at_infinity(c):
            return c
    return usable[0]


def _affine(coords, c):
    u = Fraction(coords[(c + 1) % 3], coords[c])
    v = Fraction(coords[(c + 2) % 3], coords[c])
    return u, v


def _half_plane(line, c, sign):
    # sign * (l . x) > 0 on the x_c > 0 lift: a*u + b*v + k > 0
    l = line.coeffs
    return (sign * l[(c + 1) % 3], sign * l[(c + 2) % 3], sign * l[c])


def _clip(polygon, half):
    a, b, k = half
    out = []
    m = len(polygon)
    for i in range(m):
        p, q = polygon[i], polygon[(i + 1) % m]
        fp = a * p[0] + b * p[1] + k
        fq = a * q[0] + b * q[1] + k
        if fp >= 0:
            out.append(p)
        if (fp > 0) != (fq > 0) and fp != fq:
            t = fp / (fp - fq)
            if 0 < t < 1:
                out.append((p[0] + t * (q[0] - p[0]),
                            p[1] + t * (q[1] - p[1])))
    # drop consecutive duplicates
    dedup = [pt for i, pt in enumerate(out)
             if pt != out[(i - 1) % len(out)]] if out else []
    return dedup if len(dedup) >= 3 else []


def _box_polygon(w):
    return [(-w, -w), (w, -w), (w, w), (-w, w)]


def _region_paths(region, lines, c, w):
    """Subpaths of one projective region in the chart: the two affine
    components of its lifted cone, clipped to the box."""
    subpaths = []
    for flip in (1, -1):
        poly = _box_polygon(w)
        for line, sign in zip(lines, region.signs):
            poly = _clip(poly, _half_plane(line, c, flip * sign))
            if not poly:
                break
        if poly:
            subpaths.append(poly)
    return subpaths


def _line_segment(line, c, w):
    """Chord of the line inside the box, as an exact point pair."""
    a, b, k = _half_plane(line, c, 1)
    if a == 0 and b == 0:
        return None                     # the chart's line at infinity
    pts = []
    for u in (-w, w):
        if b != 0:
            v = Fraction(-(k + a * u), b)
            if -w <= v <= w:
                pts.append((u, v))
    for v in (-w, w):
        if a != 0:
            u = Fraction(-(k + b * v), a)
            if -w <= u <= w:
                pts.append((u, v))
    uniq = sorted(set(pts))
    return (uniq[0], uniq[-1]) if len(uniq) >= 2 else None


def render_svg(arr: Arrangement, col: Coloring, chart="auto") -> str:
    """Deterministic SVG of a colored arrangement in an affine chart.

    One filled path per region (possibly two subpaths, since a
    projective region can show up twice in a chart) and one stroked path
    per line, everything clipped to a square window around the finite
    vertices.
    """
    c = _chart_index(arr, chart)
    finite = [v.point.coords for v in arr.vertices if v.point.coords[c] != 0]
    w = Fraction(3)
    for coords in finite:
        u, v = _affine(coords, c)
        w = max(w, abs(u) + 1, abs(v) + 1)

    view = f"{_fmt(-w)} {_fmt(-w)} {_fmt(2 * w)} {_fmt(2 * w)}"
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">',
           f'<!-- chart axis {"xyz"[c]} = 1 -->']
    for region in arr.regions:
        subpaths = _region_paths(region, arr.lines, c, w)
        d = " ".join(
            "M " + " L ".join(f"{_fmt(u)},{_fmt(v)}" for u, v in poly) + " Z"
            for poly in subpaths)
        out.append(f'<path class="region" id="region{region.id}" '
                   f'fill="{_FILL[col.colors[region.id]]}" '
                   f'stroke="none" d="{d}"/>')
    for i, line in enumerate(arr.lines):
        seg = _line_segment(line, c, w)
        d = ""
        if seg is not None:
            (u1, v1), (u2, v2) = seg
            d = f"M {_fmt(u1)},{_fmt(v1)} L {_fmt(u2)},{_fmt(v2)}"
        out.append(f'<path class="line" id="line{i}" stroke="#000000" '
                   f'stroke-width="{_fmt(w / 200)}" fill="none" d="{d}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dual_dot(d: DualGraph) -> str:
    """Deterministic Graphviz DOT text for a dual graph."""
    out = ["graph dual {", "  node [style=filled];"]
    for dot in sorted(d.colors):
        fill = "gray40" if d.colors[dot] == BLACK else "white"
        out.append(f'  d{dot} [fillcolor="{fill}"];')
    for a, b in sorted(tuple(sorted(e)) for e in d.edges):
        out.append(f"  d{a} -- d{b};")
    out.append("}")
    return "\n".join(out) + "\n"
