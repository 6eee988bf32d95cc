"""SVG drawings of complexes via Tutte's barycentric layout.

The boundary cycle is pinned to the unit circle (equal angular steps, in
boundary-walk order) and every other vertex is placed at the average of its
neighbours.  A closed complex is drawn with its first face removed; that
face becomes the outer region.  Output is byte-for-byte deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

from .complex import GluingData, PolygonalComplex, build_complex
from .curvature import curvature
from .errors import LayoutDegenerate, NotPlanar, ValidationError

PALETTE = {
    3: "#e6a23c", 4: "#67c23a", 5: "#409eff", 6: "#f56c6c", 7: "#9b59b6",
    8: "#1abc9c", 9: "#d35400", 10: "#7f8c8d", 11: "#2c3e50", 12: "#c0392b",
}
DEFAULT_FILL = "#bdc3c7"


@dataclass
class RenderOptions:
    layout: str = "tutte"
    positions: dict | None = None  # vertex id -> (x, y), for layout="stored"
    stroke: bool = True
    label_curvature: bool = False
    size: int = 600
    output_path: str | None = None
    boundary_fixing: str = "circle"


@dataclass
class Layout:
    complex: PolygonalComplex
    positions: np.ndarray
    dropped_face: int | None = None
    face_polygons: list = field(default_factory=list)


def _drop_face(cx: PolygonalComplex, f: int) -> PolygonalComplex:
    data = cx.gluing_data()
    fid = cx.face_ids[f]
    faces = tuple(x for x in data.faces if x[0] != fid)
    gl = tuple(g for g in data.gluings if g.a.face_id != fid and g.b.face_id != fid)
    return build_complex(GluingData(faces, gl))


def boundary_cycle(cx: PolygonalComplex) -> list[int]:
    """Vertex ids along the single boundary component."""
    start = {}
    for d in cx.boundary_darts:
        f, i = cx.slot(d)
        v = cx.corner_vertex[(f, i)]
        if v in start:
            raise NotPlanar("boundary is not a simple cycle")
        start[v] = (f, i)
    if not start:
        raise NotPlanar("complex has no boundary")
    first = min(start)
    cycle = [first]
    while True:
        f, i = start[cycle[-1]]
        nxt = cx.corner_vertex[(f, (i + 1) % cx.sides[f])]
        if nxt == first:
            break
        if nxt in cycle:
            raise NotPlanar("boundary is not a simple cycle")
        cycle.append(nxt)
    if len(cycle) != len(start):
        raise NotPlanar("boundary has more than one component")
    return cycle


def _signed_area(poly: np.ndarray) -> float:
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def tutte_layout(cx: PolygonalComplex, options: RenderOptions | None = None) -> Layout:
    options = options or RenderOptions()
    dropped = None
    if cx.is_closed:
        dropped = 0
        cx = _drop_face(cx, 0)
    if not cx.is_connected():
        raise NotPlanar("complex is disconnected")
    if cx.num_vertices - cx.num_edges + cx.num_faces != 1:
        raise NotPlanar("complex is not a disc")
    V = cx.num_vertices
    pos = np.zeros((V, 2))
    if options.layout == "stored":
        if not options.positions:
            raise ValidationError("stored layout needs positions")
        for v in range(V):
            pos[v] = options.positions[v]
    elif options.layout == "tutte":
        cycle = boundary_cycle(cx)
        fixed = np.zeros(V, bool)
        for k, v in enumerate(cycle):
            t = 2 * math.pi * k / len(cycle)
            pos[v] = (math.cos(t), math.sin(t))
            fixed[v] = True
        rows, cols = [], []
        for d, p in cx.edges:
            f, i = cx.slot(d)
            a = cx.corner_vertex[(f, i)]
            b = cx.corner_vertex[(f, (i + 1) % cx.sides[f])]
            if a != b:
                rows += [a, b]
                cols += [b, a]
        W = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(V, V)).tocsr()
        free = np.nonzero(~fixed)[0]
        if len(free):
            deg = np.asarray(W.sum(axis=1)).ravel()
            L = -W[free][:, free]
            L = L + coo_matrix((deg[free], (range(len(free)), range(len(free)))), shape=L.shape)
            rhs = W[free][:, np.nonzero(fixed)[0]] @ pos[fixed]
            pos[free] = np.column_stack(
                [spsolve(L.tocsc(), rhs[:, 0]), spsolve(L.tocsc(), rhs[:, 1])]
            ).reshape(len(free), 2)
    else:
        raise ValidationError(f"unknown layout {options.layout!r}")
    polys = []
    for f in range(cx.num_faces):
        poly = np.array([pos[cx.corner_vertex[(f, i)]] for i in range(cx.sides[f])])
        if not np.all(np.isfinite(poly)) or abs(_signed_area(poly)) < 1e-12:
            raise LayoutDegenerate(f"face {cx.face_ids[f]!r} has zero area in the layout")
        polys.append(poly)
    signs = {math.copysign(1, _signed_area(p)) for p in polys}
    if len(signs) > 1:
        raise LayoutDegenerate("faces are laid out with mixed orientations")
    return Layout(cx, pos, dropped, polys)


def _fmt(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_svg(cx: PolygonalComplex, options: RenderOptions | None = None) -> str:
    options = options or RenderOptions()
    lay = tutte_layout(cx, options)
    S = options.size
    half = S / 2.0
    scale = 0.45 * S
    tx = lambda p: (_fmt(half + scale * p[0]), _fmt(half - scale * p[1]))
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{S}" height="{S}" viewBox="0 0 {S} {S}">',
        f'<rect width="{S}" height="{S}" fill="white"/>',
    ]
    stroke = ' stroke="black" stroke-width="1"' if options.stroke else ' stroke="none"'
    for f, poly in enumerate(lay.face_polygons):
        n = lay.complex.sides[f]
        pts = " ".join(",".join(tx(p)) for p in poly)
        out.append(
            f'<polygon data-face="{lay.complex.face_ids[f]}" points="{pts}" '
            f'fill="{PALETTE.get(n, DEFAULT_FILL)}"{stroke}/>'
        )
    if options.label_curvature:
        for v in lay.complex.vertices:
            if v.is_boundary:
                continue
            x, y = tx(lay.positions[v.vertex_id])
            out.append(
                f'<text x="{x}" y="{y}" font-size="10" text-anchor="middle">{curvature(v.cyclic_sizes)}</text>'
            )
    out.append("</svg>")
    svg = "\n".join(out) + "\n"
    if options.output_path:
        with open(options.output_path, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg
