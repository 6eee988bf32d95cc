"""Isoperimetric counts for finite unions of faces.

Faces are addressed by index (0-based, in complex order).  A side that is
not glued to anything (the rim of a generator ball) never counts as a
boundary edge; use :func:`ball_profile` to make sure a requested ball does
not reach such sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .complex import Gluing, GluingData, PolygonalComplex, Slot, build_complex
from .errors import BallTouchesBoundary, ClosedSelection, EmptySelection, ValidationError

INV_SQRT3 = 1.0 / math.sqrt(3.0)


@dataclass(frozen=True)
class SubcomplexSelection:
    host: PolygonalComplex
    face_set: frozenset[int]

    def __init__(self, host: PolygonalComplex, faces: Iterable[int]):
        fs = frozenset(int(f) for f in faces)
        if not fs:
            raise EmptySelection("face set is empty")
        bad = [f for f in fs if not 0 <= f < host.num_faces]
        if bad:
            raise ValidationError(f"face indices out of range: {sorted(bad)}")
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "face_set", fs)


@dataclass(frozen=True)
class IsoperimetricReport:
    face_count: int
    boundary_edge_count: int
    ratio: Fraction
    rho_area: float
    rho_perimeter: float


def polygon_area(n: int) -> float:
    """Area of the unit-side regular Euclidean n-gon."""
    return n / (4.0 * math.tan(math.pi / n))


def area_bound(n: int) -> float:
    return n * n / (4.0 * math.pi)


def boundary_edges(sel: SubcomplexSelection) -> frozenset[tuple[int, int]]:
    """Edges (as sorted dart pairs) with one face inside and one outside."""
    cx = sel.host
    out = set()
    for f in sel.face_set:
        for i in range(cx.sides[f]):
            d = cx.dart(f, i)
            p = cx.alpha[d]
            if p < 0:
                continue
            if cx.slot(p)[0] not in sel.face_set:
                out.add((min(d, p), max(d, p)))
    return frozenset(out)


def isoperimetric_report(sel: SubcomplexSelection) -> IsoperimetricReport:
    e = len(boundary_edges(sel))
    if e == 0:
        raise ClosedSelection("selection has no boundary edges; the ratio is undefined")
    F = len(sel.face_set)
    area = math.fsum(polygon_area(sel.host.sides[f]) for f in sorted(sel.face_set))
    return IsoperimetricReport(F, e, Fraction(F, e), area, float(e))


def bfs_layers(cx: PolygonalComplex, center: int, max_radius: int) -> list[list[int]]:
    """Dual-graph BFS layers 0..max_radius (fewer if the component runs out)."""
    seen = {center}
    layers = [[center]]
    while len(layers) <= max_radius:
        nxt = []
        for f in layers[-1]:
            for g in cx.face_neighbors(f):
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        if not nxt:
            break
        layers.append(nxt)
    return layers


def ball_profile(cx: PolygonalComplex, center_face: int, max_radius: int) -> list[IsoperimetricReport]:
    if not 0 <= center_face < cx.num_faces:
        raise ValidationError(f"no face with index {center_face}")
    if max_radius < 0:
        raise ValidationError("max_radius must be >= 0")
    layers = bfs_layers(cx, center_face, max_radius)
    out = []
    ball: set[int] = set()
    for k, layer in enumerate(layers):
        for f in layer:
            if any(cx.alpha[cx.dart(f, i)] < 0 for i in range(cx.sides[f])):
                raise BallTouchesBoundary(
                    f"ball of radius {k} around face {center_face} reaches an unglued side"
                )
        ball.update(layer)
        out.append(isoperimetric_report(SubcomplexSelection(cx, ball)))
    if len(layers) <= max_radius:
        raise ClosedSelection(f"ball of radius {len(layers)} already covers the whole component")
    return out


def star_subdivide(cx: PolygonalComplex) -> PolygonalComplex:
    """Cone every n-gon off its centre into n triangles.

    Triangle ``i`` of face ``f`` is named ``"<face id>/<i>"``; its side 0 is
    the old side ``i``, side 1 runs from old corner ``i+1`` to the centre,
    side 2 from the centre back to corner ``i``.  In the flat metric the
    spokes have length ``1/(2 sin(pi/n)) >= 1/sqrt(3)``.
    """
    fid = lambda f, i: f"{cx.face_ids[f]}/{i}"
    faces = [(fid(f, i), 3) for f in range(cx.num_faces) for i in range(cx.sides[f])]
    gl = []
    for d, p in cx.edges:
        if p < 0:
            continue
        (f, i), (g, j) = cx.slot(d), cx.slot(p)
        gl.append(Gluing(Slot(fid(f, i), 0), Slot(fid(g, j), 0), cx.flip[d]))
    for f in range(cx.num_faces):
        n = cx.sides[f]
        for i in range(n):
            gl.append(Gluing(Slot(fid(f, i), 1), Slot(fid(f, (i + 1) % n), 2), True))
    return build_complex(GluingData(tuple(faces), tuple(gl)))


def spoke_length(n: int) -> float:
    return 1.0 / (2.0 * math.sin(math.pi / n))
