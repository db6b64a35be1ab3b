"""Planar pictures of projective row and column spaces as CSV and SVG."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass

from .convex import col_space, row_space
from .core import NEG_INF, POS_INF, format_scalar, is_finite
from .duality import sample_points
from .linalg import ChartUndefined, TropMatrix, proj_equal, projectivize
from .metric import chart_coordinate


@dataclass
class FigureData:
    space: str
    chart_coord: int
    dropped: list
    vertices: list
    samples: list


def _chart_points(points, coord):
    try:
        return [projectivize(p, coord) for p in points]
    except ChartUndefined as e:
        raise ChartUndefined(f"{e}; choose another chart coordinate") from None


def figure_data(a: TropMatrix, space: str = "cols", samples: int = 0, seed: int = 0,
                chart_coord: int | None = None) -> FigureData:
    """Weak-basis vertices and sampled hull points in chart coordinates.

    Coordinates on which every vertex agrees carry no information in the
    picture and are dropped; they stay constant on the whole hull.
    """
    if space not in ("rows", "cols"):
        raise ValueError("space must be 'rows' or 'cols'")
    cs = row_space(a) if space == "rows" else col_space(a)
    # draw the generators as given rather than their normalized forms, so
    # the default chart matches the way the matrix was written down
    basis = [next(g for g in cs.generators if proj_equal(g, w)) for w in cs.weak_basis]
    if not basis:
        return FigureData(space, 0, [], [], [])
    coord = chart_coordinate(basis) if chart_coord is None else chart_coord % cs.dim
    verts = _chart_points(basis, coord)
    keep = [k for k in range(cs.dim - 1) if len({v[k] for v in verts}) > 1]
    dropped = [k for k in range(cs.dim) if k != coord and k - (k > coord) not in keep]
    spread = max([abs(c) for v in verts for c in v if is_finite(c)] + [1])
    pts = sample_points(basis, cs.flavor, random.Random(seed), samples,
                        spread=spread)[len(basis):]
    cut = lambda v: tuple(v[k] for k in keep)  # noqa: E731
    return FigureData(space, coord, dropped, [cut(v) for v in verts],
                      [cut(v) for v in _chart_points(pts, coord)])


def to_csv(fig: FigureData) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    dim = len(fig.vertices[0]) if fig.vertices else 0
    w.writerow(["kind", "index"] + [f"x{k + 1}" for k in range(dim)])
    for i, v in enumerate(fig.vertices):
        w.writerow(["vertex", i] + [format_scalar(a) for a in v])
    for i, v in enumerate(fig.samples):
        w.writerow(["sample", i] + [format_scalar(a) for a in v])
    return buf.getvalue()


def to_svg(fig: FigureData, size: int = 400, margin: int = 40) -> str:
    """Scatter of the first two chart coordinates, vertices emphasized.

    Infinite coordinates are pinned to the border of the drawing.
    """
    pts = [(v, True) for v in fig.vertices] + [(v, False) for v in fig.samples]

    def xy(v):
        if len(v) >= 2:
            return v[0], v[1]
        return (v[0], 0) if v else (0, 0)

    finite = [c for v, _ in pts for c in xy(v) if is_finite(c)]
    lo, hi = (min(finite), max(finite)) if finite else (0, 1)
    if lo == hi:
        lo, hi = lo - 1, hi + 1
    lo, hi = lo - (hi - lo) / 10, hi + (hi - lo) / 10
    span = size - 2 * margin

    def scale(c, flip):
        if c is NEG_INF:
            c = lo
        elif c is POS_INF:
            c = hi
        t = float((c - lo) / (hi - lo))
        return margin + span * (1 - t if flip else t)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
           f'<rect x="{margin}" y="{margin}" width="{span}" height="{span}" '
           f'fill="none" stroke="#999"/>']
    for v, is_vertex in sorted(pts, key=lambda p: p[1]):
        x, y = xy(v)
        cx, cy = scale(x, False), scale(y, True)
        if is_vertex:
            label = "(" + ", ".join(format_scalar(a) for a in v) + ")"
            out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="black"/>')
            out.append(f'<text x="{cx + 6:.2f}" y="{cy - 6:.2f}" font-size="12">{label}</text>')
        else:
            out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="1.5" fill="#888"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
