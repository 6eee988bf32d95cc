"""Deterministic builders for the standard complexes.

The Platonic solids are fixed incidence tables (faces as counterclockwise
vertex cycles seen from outside); everything else is constructed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import (
    GluingData,
    PolygonalComplex,
    build_complex,
    canonical_form,
    from_polygons,
    is_edge_to_edge,
)
from .cover import regular_ball
from .errors import BadParameters, UnknownFamily
from .gauss_bonnet import check_gauss_bonnet

PLATONIC = {
    "tetrahedron": [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)],
    "cube": [(0, 1, 3, 2), (0, 2, 6, 4), (0, 4, 5, 1), (1, 5, 7, 3), (2, 3, 7, 6), (4, 6, 7, 5)],
    "octahedron": [
        (0, 2, 4), (0, 3, 5), (0, 4, 3), (0, 5, 2),
        (1, 2, 5), (1, 3, 4), (1, 4, 2), (1, 5, 3),
    ],
    "dodecahedron": [
        (0, 8, 4, 15, 9), (0, 9, 1, 16, 10), (0, 10, 2, 14, 8), (1, 9, 15, 5, 11),
        (1, 11, 17, 3, 16), (2, 10, 16, 3, 12), (2, 12, 18, 6, 14), (3, 17, 7, 18, 12),
        (4, 8, 14, 6, 13), (4, 13, 19, 5, 15), (5, 19, 7, 17, 11), (6, 18, 7, 19, 13),
    ],
    "icosahedron": [
        (0, 1, 2), (0, 2, 6), (0, 5, 7), (0, 6, 5), (0, 7, 1), (1, 3, 8), (1, 7, 3),
        (1, 8, 2), (2, 4, 6), (2, 8, 4), (3, 7, 11), (3, 9, 8), (3, 11, 9), (4, 8, 9),
        (4, 9, 10), (4, 10, 6), (5, 6, 10), (5, 10, 11), (5, 11, 7), (9, 11, 10),
    ],
}

# (V, E, F, p, q) for each solid
_PLATONIC_COUNTS = {
    "tetrahedron": (4, 6, 4, 3, 3),
    "cube": (8, 12, 6, 4, 3),
    "octahedron": (6, 12, 8, 3, 4),
    "dodecahedron": (20, 30, 12, 5, 3),
    "icosahedron": (12, 30, 20, 3, 5),
}

FAMILIES = (
    "platonic", "prism", "antiprism", "double_ngon", "pq_ball",
    "square_torus", "hexagonal_torus", "genus2_octagon",
)


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple = ()
    options: dict = field(default_factory=dict, compare=False, hash=False)

    def __str__(self):
        return self.family + ("(" + ",".join(map(str, self.params)) + ")" if self.params else "")


def platonic(name: str) -> GluingData:
    try:
        polys = PLATONIC[name]
    except KeyError:
        raise BadParameters(f"unknown Platonic solid {name!r}; choose from {sorted(PLATONIC)}") from None
    return from_polygons(polys)


def prism(n: int) -> GluingData:
    """Two n-gons (faces 0 and 1) joined by n squares.  Vertices: top i, bottom n+i."""
    _need(n >= 3, "prism needs n >= 3")
    top = tuple(range(n))
    bottom = tuple(n + i for i in reversed(range(n)))
    sides = [(i, n + i, n + (i + 1) % n, (i + 1) % n) for i in range(n)]
    return from_polygons([top, bottom] + sides)


def antiprism(n: int) -> GluingData:
    """Two n-gons (faces 0 and 1) joined by a band of 2n triangles."""
    _need(n >= 3, "antiprism needs n >= 3")
    top = tuple(range(n))
    bottom = tuple(n + i for i in reversed(range(n)))
    tris = []
    for i in range(n):
        j = (i + 1) % n
        tris.append((i, n + i, j))
        tris.append((j, n + i, n + j))
    return from_polygons([top, bottom] + tris)


def double_ngon(n: int) -> GluingData:
    """Two n-gons glued along their whole boundary (a pillow; not edge-to-edge)."""
    _need(n >= 3, "double_ngon needs n >= 3")
    return from_polygons([tuple(range(n)), tuple(reversed(range(n)))])


def square_torus() -> GluingData:
    return GluingData.from_pairs([(0, 4)], [((0, 0), (0, 2)), ((0, 1), (0, 3))])


def hexagonal_torus() -> GluingData:
    """One hexagon with opposite sides glued: 2 vertices of type [6,6,6]."""
    return GluingData.from_pairs([(0, 6)], [((0, 0), (0, 3)), ((0, 1), (0, 4)), ((0, 2), (0, 5))])


def genus2_octagon() -> GluingData:
    """Octagon with word a b a^-1 b^-1 c d c^-1 d^-1."""
    return GluingData.from_pairs(
        [(0, 8)], [((0, 0), (0, 2)), ((0, 1), (0, 3)), ((0, 4), (0, 6)), ((0, 5), (0, 7))]
    )


def pq_ball(p: int, q: int, radius: int, complete_rim: bool = False) -> PolygonalComplex:
    """Faces of the {p, q} tessellation within dual distance ``radius`` of a seed p-gon.

    With ``complete_rim`` every vertex of those faces also gets its full link
    of q faces (the extra faces lie outside the radius).
    """
    _need(p >= 3 and q >= 3, "pq_ball needs p >= 3 and q >= 3")
    _need(radius >= 0, "pq_ball needs radius >= 0")
    cx, _ = regular_ball(p, q, radius, complete_rim=complete_rim)
    return cx


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameters(msg)


def generate(spec: GeneratorSpec | str, *params, **options) -> PolygonalComplex:
    if isinstance(spec, str):
        spec = GeneratorSpec(spec, tuple(params), dict(options))
    fam, args = spec.family, spec.params
    try:
        if fam == "platonic":
            return build_complex(platonic(*args))
        if fam == "pq_ball":
            return pq_ball(*(int(a) for a in args), **spec.options)
        builders = {
            "prism": prism,
            "antiprism": antiprism,
            "double_ngon": double_ngon,
            "square_torus": square_torus,
            "hexagonal_torus": hexagonal_torus,
            "genus2_octagon": genus2_octagon,
        }
        if fam not in builders:
            raise UnknownFamily(f"unknown family {fam!r}; choose from {FAMILIES}")
        return build_complex(builders[fam](*(int(a) for a in args)))
    except TypeError as exc:
        raise BadParameters(f"bad parameters for {fam}: {exc}") from None


def closed_fixtures() -> dict[str, PolygonalComplex]:
    """Every built-in closed complex, keyed by a readable name."""
    out = {}
    for name in PLATONIC:
        out[name] = generate("platonic", name)
    for n in range(3, 9):
        out[f"prism({n})"] = generate("prism", n)
        out[f"antiprism({n})"] = generate("antiprism", n)
        out[f"double_ngon({n})"] = generate("double_ngon", n)
    out["square_torus"] = generate("square_torus")
    out["hexagonal_torus"] = generate("hexagonal_torus")
    out["genus2_octagon"] = generate("genus2_octagon")
    return out


def verify_generator(spec: GeneratorSpec | str, cx: PolygonalComplex, *params) -> bool:
    """Family-specific postconditions: counts, vertex-types, Euler characteristic."""
    if isinstance(spec, str):
        spec = GeneratorSpec(spec, tuple(params))
    fam, args = spec.family, spec.params
    types = {v.vertex_type.sizes for v in cx.vertices if not v.is_boundary}
    closed = fam != "pq_ball"
    if closed and not (cx.is_closed and check_gauss_bonnet(cx).consistent):
        return False
    chi = cx.num_vertices - cx.num_edges + cx.num_faces
    if fam == "platonic":
        V, E, F, p, q = _PLATONIC_COUNTS[args[0]]
        return (cx.num_vertices, cx.num_edges, cx.num_faces) == (V, E, F) and types == {(p,) * q} and is_edge_to_edge(cx).ok
    if fam == "prism":
        n = int(args[0])
        counts = (cx.num_vertices, cx.num_edges, cx.num_faces)
        return types == {canonical_form((n, 4, 4))} and counts == (2 * n, 3 * n, n + 2) and chi == 2
    if fam == "antiprism":
        n = int(args[0])
        counts = (cx.num_vertices, cx.num_edges, cx.num_faces)
        return types == {canonical_form((n, 3, 3, 3))} and counts == (2 * n, 4 * n, 2 * n + 2) and chi == 2
    if fam == "double_ngon":
        n = int(args[0])
        return types == {(n, n)} and (cx.num_vertices, cx.num_edges, cx.num_faces) == (n, n, 2) and not is_edge_to_edge(cx).ok
    if fam == "square_torus":
        return types == {(4, 4, 4, 4)} and chi == 0
    if fam == "hexagonal_torus":
        return types == {(6, 6, 6)} and chi == 0 and cx.num_vertices == 2
    if fam == "genus2_octagon":
        return types == {(8,) * 8} and chi == -2
    if fam == "pq_ball":
        p, q = int(args[0]), int(args[1])
        return all(s == p for s in cx.sides) and types <= {(p,) * q}
    raise UnknownFamily(f"unknown family {fam!r}")
