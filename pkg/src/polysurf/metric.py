"""Upper bounds for the piecewise-geodesic metric on an r-spherical surface.

Every face is realized as a unit regular spherical polygon in its own chart:
the face centre sits at the north pole ``(0, 0, r)`` and corner ``k`` at
azimuth ``2*pi*k/n``.  Faces are convex, so the great-circle arc between
two points of one face stays in the face and is the exact in-face distance.

The mesh samples every edge at ``m = ceil(1/h)`` equal arc-length steps
(samples on glued sides are shared) and fills each face with a triangular
lattice of pitch ``h`` laid out in the gnomonic chart.  Any two nodes of a
common face are linked by their spherical distance, so every mesh path is
a genuine piecewise geodesic and every mesh distance is an upper bound for
the true distance.  Shortest paths only ever turn at edge samples, which
is what the implementation exploits: all-pairs distances are computed over
edge samples once and extended to interior points by min-plus products.

Node budget: ``V + E*(m-1) + sum_f A_f / (h^2 * sqrt(3)/2)`` where ``A_f``
is the area of face ``f`` in the gnomonic chart (see
:func:`estimated_node_count`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import shortest_path

from .complex import PolygonalComplex
from .errors import Disconnected, HypothesisViolated, MeshTooFine, RadiusTooSmall, ValidationError
from .spherical import TWO_PI, polygon_spec, spherical_angle_sum

DEFAULT_BUDGET = 200_000


def sphere_distance(r: float, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Great-circle distance between points (rows) on the radius-r sphere."""
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    cross = np.linalg.norm(np.cross(u, v), axis=-1)
    dot = np.sum(u * v, axis=-1)
    return r * np.arctan2(cross, dot)


def _pairwise(r: float, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Distance matrix between point sets ``a`` (k,3) and ``b`` (l,3)."""
    dot = a @ b.T
    na = np.linalg.norm(a, axis=1)[:, None]
    nb = np.linalg.norm(b, axis=1)[None, :]
    cos = np.clip(dot / (na * nb), -1.0, 1.0)
    ang = np.arccos(cos)
    # arccos loses accuracy near 0; fall back to the chord there
    small = ang < 1e-4
    if small.any():
        diff = a[:, None, :] - b[None, :, :]
        chord = np.linalg.norm(diff, axis=2)
        ang = np.where(small, 2.0 * np.arcsin(np.clip(chord / (2.0 * r), 0.0, 1.0)), ang)
    return r * ang


@dataclass(frozen=True)
class EmbeddedFace:
    face: int
    n: int
    r: float
    vertex_positions: np.ndarray = field(repr=False)
    circumradius: float = 0.0

    @property
    def center(self) -> np.ndarray:
        return np.array([0.0, 0.0, self.r])

    def edge_lengths(self) -> np.ndarray:
        v = self.vertex_positions
        return sphere_distance(self.r, v, np.roll(v, -1, axis=0))

    def interior_angles(self) -> np.ndarray:
        v = self.vertex_positions
        out = []
        for k in range(self.n):
            p, a, b = v[k], v[k - 1], v[(k + 1) % self.n]
            ta = a - (p @ a) / (self.r ** 2) * p
            tb = b - (p @ b) / (self.r ** 2) * p
            out.append(math.atan2(np.linalg.norm(np.cross(ta, tb)), ta @ tb))
        return np.array(out)

    def gnomonic(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, float)
        return self.r * p[..., :2] / p[..., 2:3]

    def from_gnomonic(self, g: np.ndarray) -> np.ndarray:
        g = np.atleast_2d(np.asarray(g, float))
        d = np.column_stack([g, np.full(len(g), self.r)])
        return self.r * d / np.linalg.norm(d, axis=1)[:, None]

    def gnomonic_polygon(self) -> np.ndarray:
        return self.gnomonic(self.vertex_positions)

    def contains(self, p: np.ndarray, tol: float = 1e-9) -> bool:
        p = np.asarray(p, float)
        if p[2] <= 0:
            return False
        g = self.gnomonic(p)
        poly = self.gnomonic_polygon()
        for k in range(self.n):
            a, b = poly[k], poly[(k + 1) % self.n]
            if (b[0] - a[0]) * (g[1] - a[1]) - (b[1] - a[1]) * (g[0] - a[0]) < -tol:
                return False
        return True

    def point_toward_center(self, k: int, dist: float) -> np.ndarray:
        """Point at geodesic distance ``dist`` from corner ``k`` toward the centre."""
        if not 0 <= dist <= self.circumradius:
            raise ValueError("distance must lie between 0 and the circumradius")
        t = 1.0 - dist / self.circumradius
        return _slerp(self.center, self.vertex_positions[k % self.n], t)


def _slerp(u: np.ndarray, v: np.ndarray, t: float | np.ndarray) -> np.ndarray:
    u = np.asarray(u, float)
    v = np.asarray(v, float)
    r = np.linalg.norm(u)
    omega = math.atan2(np.linalg.norm(np.cross(u, v)), u @ v)
    t = np.atleast_1d(np.asarray(t, float))[:, None]
    if omega < 1e-15:
        out = np.repeat(u[None, :], len(t), axis=0)
    else:
        out = (np.sin((1 - t) * omega) * u + np.sin(t * omega) * v) / math.sin(omega)
    out *= r / np.linalg.norm(out, axis=1)[:, None]
    return out if out.shape[0] > 1 else out[0]


def _check_radius(cx: PolygonalComplex, r: float) -> None:
    need = max(cx.sides) / TWO_PI
    if not r > need:
        raise RadiusTooSmall(f"r={r} must exceed max face size / (2 pi) = {need:.12g}")


def embed_face(face: int, n: int, r: float) -> EmbeddedFace:
    spec = polygon_spec(r, n)
    theta = spec.circumradius / r
    az = TWO_PI * np.arange(n) / n
    pos = r * np.column_stack(
        [math.sin(theta) * np.cos(az), math.sin(theta) * np.sin(az), np.full(n, math.cos(theta))]
    )
    return EmbeddedFace(face, n, float(r), pos, spec.circumradius)


def embed_faces(cx: PolygonalComplex, r: float) -> list[EmbeddedFace]:
    _check_radius(cx, r)
    return [embed_face(f, n, r) for f, n in enumerate(cx.sides)]


@dataclass(frozen=True)
class SurfacePoint:
    face: int
    position: tuple[float, float, float]

    @property
    def xyz(self) -> np.ndarray:
        return np.asarray(self.position, float)


@dataclass(frozen=True)
class DistanceEstimate:
    value: float
    resolution: float
    kind: str = "upper_bound"
    crossings: int = 0
    path: tuple[int, ...] = ()
    endpoints: tuple = ()


def _lattice(ef: EmbeddedFace, h: float) -> np.ndarray:
    """Triangular lattice of pitch ``h`` inside the gnomonic polygon, inset by h/3."""
    poly = ef.gnomonic_polygon()
    rg = float(np.linalg.norm(poly[0]))
    inr = rg * math.cos(math.pi / ef.n)
    margin = h / 3.0
    rows = int(math.ceil(rg / (h * math.sqrt(3) / 2))) + 1
    cols = int(math.ceil(rg / h)) + 1
    jj, ii = np.meshgrid(np.arange(-rows, rows + 1), np.arange(-cols, cols + 1), indexing="ij")
    x = (ii + 0.5 * (jj % 2)) * h
    y = jj * h * math.sqrt(3) / 2
    pts = np.column_stack([x.ravel(), y.ravel()])
    keep = np.ones(len(pts), bool)
    for k in range(ef.n):
        mid = TWO_PI * (k + 0.5) / ef.n
        normal = np.array([math.cos(mid), math.sin(mid)])
        keep &= pts @ normal <= inr - margin
    return pts[keep]


def estimated_node_count(cx: PolygonalComplex, r: float, h: float) -> float:
    m = int(math.ceil(1.0 / h))
    interior = 0.0
    for n in cx.sides:
        rg = r * math.tan(polygon_spec(r, n).circumradius / r)
        interior += 0.5 * n * rg * rg * math.sin(TWO_PI / n) / (h * h * math.sqrt(3) / 2)
    return cx.num_vertices + cx.num_edges * (m - 1) + interior


class MeshGraph:
    """Sampled r-spherical realization of a complex.  Build with :func:`build_mesh`."""

    def __init__(self, cx: PolygonalComplex, r: float, h: float, faces, m: int):
        self.complex = cx
        self.r = float(r)
        self.h = float(h)
        self.m = m
        self.faces: list[EmbeddedFace] = faces
        self.nodes: list[SurfacePoint] = []
        self.kind: list[str] = []
        self.vertex_node: dict[int, int] = {}
        self.node_faces: list[list[int]] = []
        self.face_nodes: list[np.ndarray] = []
        self.face_pos: list[np.ndarray] = []
        self.face_nb: list[int] = []  # boundary nodes come first in each face list
        self._D = None
        self._pred = None

    @property
    def edge_spacing(self) -> float:
        return 1.0 / self.m

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    # -- boundary all-pairs ---------------------------------------------------
    def _boundary_index(self):
        ids = [i for i, k in enumerate(self.kind) if k != "interior"]
        return np.array(ids), {g: k for k, g in enumerate(ids)}

    def _ensure_apsp(self) -> None:
        if self._D is not None:
            return
        ids, where = self._boundary_index()
        rows, cols, vals = [], [], []
        for f, ef in enumerate(self.faces):
            nb = self.face_nb[f]
            bid = np.array([where[g] for g in self.face_nodes[f][:nb]])
            pos = self.face_pos[f][:nb]
            w = _pairwise(self.r, pos, pos)
            iu, ju = np.triu_indices(nb, 1)
            rows.append(bid[iu])
            cols.append(bid[ju])
            vals.append(w[iu, ju])
        rows = np.concatenate(rows)
        cols = np.concatenate(cols)
        vals = np.maximum(np.concatenate(vals), 1e-300)
        nbt = len(ids)
        # keep the shorter of duplicate links (two faces sharing a side)
        order = np.lexsort((vals, cols, rows))
        rows, cols, vals = rows[order], cols[order], vals[order]
        first = np.ones(len(rows), bool)
        first[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
        g = coo_matrix((vals[first], (rows[first], cols[first])), shape=(nbt, nbt)).tocsr()
        D, pred = shortest_path(g, method="D", directed=False, return_predecessors=True)
        self._bids, self._bwhere = ids, where
        self._D, self._pred = D, pred

    @property
    def boundary_distances(self) -> np.ndarray:
        self._ensure_apsp()
        return self._D

    def links(self) -> Iterable[tuple[int, int, float]]:
        """Every mesh link ``(u, v, length)`` with ``u < v``."""
        seen = {}
        for f in range(len(self.faces)):
            ids = self.face_nodes[f]
            w = _pairwise(self.r, self.face_pos[f], self.face_pos[f])
            iu, ju = np.triu_indices(len(ids), 1)
            for a, b, d in zip(ids[iu], ids[ju], w[iu, ju]):
                key = (min(a, b), max(a, b))
                if key not in seen or d < seen[key]:
                    seen[key] = d
        for (a, b), d in sorted(seen.items()):
            yield int(a), int(b), float(d)

    def to_sparse(self):
        rows, cols, vals = zip(*self.links())
        n = self.num_nodes
        return coo_matrix((np.maximum(vals, 1e-300), (rows, cols)), shape=(n, n)).tocsr()

    # -- point queries ----------------------------------------------------------
    def node_point(self, node: int) -> SurfacePoint:
        return self.nodes[node]

    def _local(self, p: SurfacePoint):
        f = p.face
        nb = self.face_nb[f]
        d = _pairwise(self.r, p.xyz[None, :], self.face_pos[f][:nb])[0]
        bidx = np.array([self._bwhere[g] for g in self.face_nodes[f][:nb]])
        return f, d, bidx

    def boundary_vector(self, p: SurfacePoint) -> np.ndarray:
        """Mesh distance from ``p`` to every edge sample / vertex node."""
        self._ensure_apsp()
        _, d, bidx = self._local(p)
        return np.min(d[:, None] + self._D[bidx, :], axis=0)

    def vertex_boundary_index(self, vertex: int) -> int:
        self._ensure_apsp()
        return self._bwhere[self.vertex_node[vertex]]


def build_mesh(cx: PolygonalComplex, r: float, h: float, budget: int = DEFAULT_BUDGET) -> MeshGraph:
    if not 0 < h <= 0.5:
        raise ValidationError("resolution h must lie in (0, 0.5]")
    faces = embed_faces(cx, r)
    est = estimated_node_count(cx, r, h)
    if est > budget:
        raise MeshTooFine(f"about {int(est)} nodes needed at h={h}; budget is {budget}")
    m = int(math.ceil(1.0 / h - 1e-12))
    mesh = MeshGraph(cx, r, h, faces, m)

    def add(point: SurfacePoint, kind: str, face: int) -> int:
        mesh.nodes.append(point)
        mesh.kind.append(kind)
        mesh.node_faces.append([face])
        return len(mesh.nodes) - 1

    for v in cx.vertices:
        f, k = v.corners[0]
        pos = faces[f].vertex_positions[k]
        mesh.vertex_node[v.vertex_id] = add(SurfacePoint(f, tuple(pos)), "vertex", f)
        for g, _ in v.corners[1:]:
            if g not in mesh.node_faces[-1]:
                mesh.node_faces[-1].append(g)

    # edge samples: ids in the direction of each dart
    ts = np.arange(1, m) / m
    samples: dict[int, list[int]] = {}
    for d, p in cx.edges:
        f, i = cx.slot(d)
        ef = faces[f]
        pts = _slerp(ef.vertex_positions[i], ef.vertex_positions[(i + 1) % ef.n], ts) if m > 1 else np.zeros((0, 3))
        pts = np.atleast_2d(pts) if m > 1 else pts
        ids = [add(SurfacePoint(f, tuple(q)), "edge", f) for q in pts]
        samples[d] = ids
        if p >= 0:
            g = cx.slot(p)[0]
            for nid in ids:
                if g not in mesh.node_faces[nid]:
                    mesh.node_faces[nid].append(g)
            samples[p] = ids[::-1] if cx.flip[d] else list(ids)

    for f, ef in enumerate(faces):
        ids, pos = [], []
        for i in range(ef.n):
            ids.append(mesh.vertex_node[cx.corner_vertex[(f, i)]])
            pos.append(ef.vertex_positions[i])
            if m > 1:
                along = _slerp(ef.vertex_positions[i], ef.vertex_positions[(i + 1) % ef.n], ts)
                ids.extend(samples[cx.dart(f, i)])
                pos.extend(np.atleast_2d(along))
        nb = len(ids)
        inner = ef.from_gnomonic(_lattice(ef, h))
        for q in inner:
            ids.append(add(SurfacePoint(f, tuple(q)), "interior", f))
            pos.append(q)
        mesh.face_nodes.append(np.array(ids, dtype=int))
        mesh.face_pos.append(np.array(pos, float))
        mesh.face_nb.append(nb)
    return mesh


def _face_of(mesh: MeshGraph, node: int) -> int:
    return mesh.node_faces[node][0]


def _local_position(mesh: MeshGraph, node: int, face: int) -> np.ndarray:
    where = np.nonzero(mesh.face_nodes[face] == node)[0]
    return mesh.face_pos[face][where[0]]


def as_point(mesh: MeshGraph, x) -> SurfacePoint:
    """Accept a node id or a :class:`SurfacePoint`."""
    if isinstance(x, SurfacePoint):
        return x
    return mesh.nodes[int(x)]


def _point_faces(mesh: MeshGraph, x) -> list[tuple[int, np.ndarray]]:
    if isinstance(x, SurfacePoint):
        return [(x.face, x.xyz)]
    return [(f, _local_position(mesh, int(x), f)) for f in mesh.node_faces[int(x)]]


def _order_key(x):
    if isinstance(x, SurfacePoint):
        return (1, x.face, tuple(x.position))
    return (0, int(x), ())


def approx_distance(mesh: MeshGraph, x, y) -> DistanceEstimate:
    """Shortest mesh path between ``x`` and ``y`` (node ids or surface points).

    Points that are not nodes are linked to the edge samples of their face.
    """
    mesh._ensure_apsp()
    if _order_key(y) < _order_key(x):
        # evaluate in one fixed order so the result is exactly symmetric
        est = approx_distance(mesh, y, x)
        return DistanceEstimate(est.value, est.resolution, est.kind, est.crossings, est.path[::-1], est.endpoints[::-1])
    px, py = as_point(mesh, x), as_point(mesh, y)
    best = math.inf
    path: tuple[int, ...] = ()
    fx, fy = _point_faces(mesh, x), _point_faces(mesh, y)
    for f, a in fx:
        for g, b in fy:
            if f == g:
                direct = float(sphere_distance(mesh.r, a, b))
                if direct < best:
                    best, path = direct, ()
    for f, a in fx:
        sx = SurfacePoint(f, tuple(a))
        _, dx, bx = mesh._local(sx)
        for g, b in fy:
            sy = SurfacePoint(g, tuple(b))
            _, dy, by = mesh._local(sy)
            tot = dx[:, None] + mesh._D[np.ix_(bx, by)] + dy[None, :]
            k = np.unravel_index(np.argmin(tot), tot.shape)
            val = float(tot[k])
            if val < best - 1e-15:
                best = val
                path = _reconstruct(mesh, bx[k[0]], by[k[1]])
    if not math.isfinite(best):
        raise Disconnected("points lie in different components of the mesh")
    return DistanceEstimate(best, mesh.h, crossings=len(path), path=path, endpoints=(px, py))


def _reconstruct(mesh: MeshGraph, a: int, b: int) -> tuple[int, ...]:
    out = [b]
    while out[-1] != a:
        prev = mesh._pred[a, out[-1]]
        if prev < 0:
            raise Disconnected("no mesh path between boundary nodes")
        out.append(prev)
    return tuple(int(mesh._bids[i]) for i in reversed(out))


def refinement_bound(fine: DistanceEstimate, coarse: MeshGraph) -> float:
    """How far a coarse-mesh estimate can exceed the finer one.

    Each place the fine path crosses an edge can be moved to the nearest
    coarse edge sample, lengthening the path by at most one coarse spacing.
    """
    return fine.crossings * coarse.edge_spacing


def _minplus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``out[i, j] = min_k a[i, k] + b[k, j]``."""
    out = np.full((a.shape[0], b.shape[1]), np.inf)
    tmp = np.empty_like(out)
    for k in range(a.shape[1]):
        np.add(a[:, k, None], b[None, k, :], out=tmp)
        np.minimum(out, tmp, out=out)
    return out


def node_distance_matrix(mesh: MeshGraph, f: int, g: int) -> np.ndarray:
    """Mesh distances between every node of face ``f`` and every node of face ``g``."""
    mesh._ensure_apsp()
    nbf, nbg = mesh.face_nb[f], mesh.face_nb[g]
    bf = np.array([mesh._bwhere[i] for i in mesh.face_nodes[f][:nbf]])
    bg = np.array([mesh._bwhere[i] for i in mesh.face_nodes[g][:nbg]])
    xf = _pairwise(mesh.r, mesh.face_pos[f], mesh.face_pos[f][:nbf])
    xg = _pairwise(mesh.r, mesh.face_pos[g], mesh.face_pos[g][:nbg])
    t = _minplus(xf, mesh._D[np.ix_(bf, bg)])
    out = _minplus(t, xg.T)
    if f == g:
        np.minimum(out, _pairwise(mesh.r, mesh.face_pos[f], mesh.face_pos[f]), out=out)
    return out


def approx_diameter(mesh: MeshGraph) -> DistanceEstimate:
    """Largest mesh distance over all node pairs."""
    if not mesh.complex.is_closed:
        raise ValidationError("diameter estimates need a closed complex")
    mesh._ensure_apsp()
    best = -1.0
    pair = (0, 0)
    nf = len(mesh.faces)
    for f in range(nf):
        for g in range(f, nf):
            M = node_distance_matrix(mesh, f, g)
            k = np.unravel_index(np.argmax(M), M.shape)
            if not np.isfinite(M[k]):
                raise Disconnected("mesh is disconnected")
            if M[k] > best:
                best = float(M[k])
                pair = (int(mesh.face_nodes[f][k[0]]), int(mesh.face_nodes[g][k[1]]))
    return DistanceEstimate(best, mesh.h, path=pair)


@dataclass
class PairDetour:
    x: SurfacePoint
    y: SurfacePoint
    distance: float
    detour: float
    via_vertex: int


@dataclass
class AvoidanceReport:
    r: float
    h: float
    pairs: list[PairDetour]

    @property
    def min_detour(self) -> float:
        return min(p.detour for p in self.pairs)

    @property
    def all_nonnegative(self) -> bool:
        return all(p.detour >= 0 for p in self.pairs)


def check_angle_hypothesis(cx: PolygonalComplex, r: float) -> None:
    for v in cx.vertices:
        if v.is_boundary:
            continue
        a = spherical_angle_sum(v.cyclic_sizes, r)
        if a >= TWO_PI:
            raise HypothesisViolated(
                f"vertex {v.vertex_id} of type {v.vertex_type} has angle-sum {a:.6g} >= 2 pi at r={r}"
            )


def _vertex_at(mesh: MeshGraph, p: SurfacePoint, tol: float = 1e-9) -> int | None:
    ef = mesh.faces[p.face]
    d = sphere_distance(mesh.r, ef.vertex_positions, p.xyz)
    k = int(np.argmin(d))
    if d[k] <= tol:
        return mesh.complex.corner_vertex[(p.face, k)]
    return None


def _pair_detour(mesh: MeshGraph, x: SurfacePoint, y: SurfacePoint) -> PairDetour:
    vx = mesh.boundary_vector(x)
    vy = mesh.boundary_vector(y)
    dxy = approx_distance(mesh, x, y).value
    skip = {_vertex_at(mesh, x), _vertex_at(mesh, y)}
    best, arg = math.inf, -1
    for v in mesh.complex.vertices:
        if v.vertex_id in skip:
            continue
        b = mesh.vertex_boundary_index(v.vertex_id)
        c = vx[b] + vy[b]
        if c < best:
            best, arg = c, v.vertex_id
    return PairDetour(x, y, dxy, best - dxy, arg)


def vertex_avoidance_probe(
    mesh: MeshGraph,
    cx: PolygonalComplex | None = None,
    r: float | None = None,
    pairs: int = 50,
    seed: int = 0,
    extra_pairs: Sequence[tuple[SurfacePoint, SurfacePoint]] = (),
) -> AvoidanceReport:
    """Compare best paths forced through a vertex with unconstrained best paths.

    ``pairs`` random node pairs (no vertex nodes) are drawn with ``seed``;
    ``extra_pairs`` are appended as given.  A vertex that is an endpoint of
    the pair is left out of the detour set.
    """
    cx = mesh.complex if cx is None else cx
    r = mesh.r if r is None else r
    if cx is not mesh.complex or abs(r - mesh.r) > 1e-12:
        raise ValidationError("mesh was built for a different complex or radius")
    check_angle_hypothesis(cx, r)
    rng = np.random.default_rng(seed)
    candidates = np.array([i for i, k in enumerate(mesh.kind) if k != "vertex"])
    out = []
    for _ in range(pairs):
        a, b = rng.choice(candidates, size=2, replace=False)
        out.append(_pair_detour(mesh, mesh.nodes[int(a)], mesh.nodes[int(b)]))
    for x, y in extra_pairs:
        out.append(_pair_detour(mesh, x, y))
    return AvoidanceReport(r, mesh.h, out)


def straddling_pair(mesh: MeshGraph, vertex: int = 0, dist: float = 0.25) -> tuple[SurfacePoint, SurfacePoint]:
    """Two points on the corner bisectors of the first two faces around ``vertex``."""
    v = mesh.complex.vertices[vertex]
    (f, i), (g, j) = v.corners[0], v.corners[1]
    x = mesh.faces[f].point_toward_center(i, dist)
    y = mesh.faces[g].point_toward_center(j, dist)
    return SurfacePoint(f, tuple(x)), SurfacePoint(g, tuple(y))


def face_center(mesh: MeshGraph, face: int) -> SurfacePoint:
    return SurfacePoint(face, tuple(mesh.faces[face].center))


__all__ = [
    "EmbeddedFace",
    "SurfacePoint",
    "DistanceEstimate",
    "MeshGraph",
    "embed_faces",
    "build_mesh",
    "approx_distance",
    "approx_diameter",
    "vertex_avoidance_probe",
    "refinement_bound",
    "estimated_node_count",
    "face_center",
    "straddling_pair",
    "sphere_distance",
    "check_angle_hypothesis",
    "AvoidanceReport",
    "PairDetour",
]
