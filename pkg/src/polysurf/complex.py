"""Polygonal surfaces as combinatorial gluing data.

A surface is a finite set of polygons whose sides are glued in pairs.  Each
polygon side is a *slot* ``(face_id, side_index)``; side ``i`` runs from
corner ``i`` to corner ``i + 1`` with the face listed counterclockwise.

Internally every slot is a *dart* (an integer).  ``phi`` steps to the next
dart of the same face, ``alpha`` to the glued partner (``-1`` for an
unpaired, i.e. boundary, slot) and ``sigma = phi . alpha`` rotates around
the origin vertex of a dart when all gluings reverse orientation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import (
    BadSideCount,
    BadVertexType,
    DuplicateSlot,
    SelfPairedSlot,
    UnknownSlot,
    ValidationError,
)

FaceId = Union[int, str]


@dataclass(frozen=True)
class Slot:
    face_id: FaceId
    side_index: int

    def __iter__(self):
        return iter((self.face_id, self.side_index))


@dataclass(frozen=True)
class Gluing:
    a: Slot
    b: Slot
    reversed: bool = True


@dataclass(frozen=True)
class GluingData:
    """Faces ``(face_id, sides)`` and the unordered slot pairs glued together."""

    faces: tuple[tuple[FaceId, int], ...]
    gluings: tuple[Gluing, ...] = ()

    @classmethod
    def from_pairs(cls, faces, pairs, reversed: bool = True) -> "GluingData":
        """Shorthand: ``pairs`` is an iterable of ``((f, i), (g, j))``."""
        gl = tuple(Gluing(Slot(*a), Slot(*b), reversed) for a, b in pairs)
        return cls(tuple((f, int(n)) for f, n in faces), gl)


def canonical_form(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation or reflection of a cyclic sequence."""
    seq = tuple(int(k) for k in seq)
    if not seq:
        return seq
    n = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for i in range(n):
            cand = s[i:] + s[:i]
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True, order=True)
class VertexType:
    """Cyclic tuple of face sizes around a vertex, stored in canonical form."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes:
            raise BadVertexType("a vertex-type needs at least one face")
        if any(int(k) != k or k < 3 for k in self.sizes):
            raise BadVertexType(f"face sizes must be integers >= 3, got {list(self.sizes)}")
        object.__setattr__(self, "sizes", canonical_form(self.sizes))

    @property
    def degree(self) -> int:
        return len(self.sizes)

    def __len__(self):
        return len(self.sizes)

    def __iter__(self):
        return iter(self.sizes)

    def __str__(self):
        return "[" + ",".join(map(str, self.sizes)) + "]"

    @classmethod
    def parse(cls, text: str) -> "VertexType":
        """Parse ``"5,5,5"`` or ``"[5,5,5]"``."""
        body = text.strip().strip("[]")
        try:
            return cls(tuple(int(t) for t in body.replace(" ", "").split(",") if t))
        except ValueError as exc:
            if isinstance(exc, BadVertexType):
                raise
            raise BadVertexType(f"cannot parse vertex-type {text!r}") from None


@dataclass(frozen=True)
class VertexRecord:
    vertex_id: int
    vertex_type: VertexType
    is_boundary: bool
    # (face_index, corner) pairs in link order; sizes in the same order
    corners: tuple[tuple[int, int], ...] = field(repr=False)
    cyclic_sizes: tuple[int, ...] = field(repr=False)

    @property
    def degree(self) -> int:
        # a linear link over m corners touches m + 1 edge ends
        return len(self.corners) + (1 if self.is_boundary else 0)


class EdgeToEdgeResult(NamedTuple):
    ok: bool
    witness: str | None


class PolygonalComplex:
    """Immutable combinatorial map built from :class:`GluingData`.

    Use :func:`build_complex` to construct one.
    """

    def __init__(self, face_ids, sides, alpha, flip):
        self.face_ids: tuple[FaceId, ...] = tuple(face_ids)
        self.sides: tuple[int, ...] = tuple(sides)
        offsets = [0]
        for n in self.sides:
            offsets.append(offsets[-1] + n)
        self.offsets: tuple[int, ...] = tuple(offsets)
        self.n_darts = offsets[-1]
        self.alpha: tuple[int, ...] = tuple(alpha)
        # flip[d] is True when the gluing at d reverses orientation
        self.flip: tuple[bool, ...] = tuple(flip)
        self._face_of = tuple(f for f, n in enumerate(self.sides) for _ in range(n))
        self._index = {fid: k for k, fid in enumerate(self.face_ids)}

    # -- darts ---------------------------------------------------------
    def dart(self, face: int, side: int) -> int:
        return self.offsets[face] + side % self.sides[face]

    def slot(self, d: int) -> tuple[int, int]:
        f = self._face_of[d]
        return f, d - self.offsets[f]

    def face_index(self, face_id: FaceId) -> int:
        return self._index[face_id]

    def phi(self, d: int) -> int:
        f, i = self.slot(d)
        return self.offsets[f] + (i + 1) % self.sides[f]

    def sigma(self, d: int) -> int | None:
        """``phi(alpha(d))``; ``None`` at a boundary dart."""
        a = self.alpha[d]
        return None if a < 0 else self.phi(a)

    @property
    def num_faces(self) -> int:
        return len(self.sides)

    @cached_property
    def boundary_darts(self) -> tuple[int, ...]:
        return tuple(d for d in range(self.n_darts) if self.alpha[d] < 0)

    @property
    def is_closed(self) -> bool:
        return not self.boundary_darts

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """One ``(dart, partner)`` per edge; ``partner == -1`` on the boundary."""
        out = []
        for d in range(self.n_darts):
            a = self.alpha[d]
            if a < 0 or d < a:
                out.append((d, a))
        return tuple(out)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    # -- vertices ------------------------------------------------------
    def _cross(self, f: int, i: int, s: int):
        """Leave corner ``i`` of face ``f`` through side ``s``.

        Returns the ``(face, corner, exit_side)`` reached on the other side of
        the edge, or ``None`` when ``s`` is unpaired.
        """
        d = self.offsets[f] + s
        p = self.alpha[d]
        if p < 0:
            return None
        g, j = self.slot(p)
        n = self.sides[g]
        at_start = i == s
        if self.flip[d]:
            land = (j + 1) % n if at_start else j
        else:
            land = j if at_start else (j + 1) % n
        exit_side = (land - 1) % n if land == j else land
        return g, land, exit_side

    def _walk(self, f: int, i: int, s: int, stop: tuple[int, int]):
        corners = []
        state = (f, i, s)
        limit = self.n_darts + 1
        while True:
            nxt = self._cross(*state)
            if nxt is None:
                return corners, False
            if (nxt[0], nxt[1]) == stop:
                return corners, True
            corners.append((nxt[0], nxt[1]))
            state = nxt
            limit -= 1
            if limit < 0:
                raise ValidationError("vertex link walk did not terminate")

    @cached_property
    def vertices(self) -> tuple[VertexRecord, ...]:
        seen: set[tuple[int, int]] = set()
        records = []
        for f, n in enumerate(self.sides):
            for i in range(n):
                if (f, i) in seen:
                    continue
                fwd, closed = self._walk(f, i, i, (f, i))
                if closed:
                    chain = [(f, i)] + fwd
                else:
                    back, _ = self._walk(f, i, (i - 1) % n, (f, i))
                    chain = back[::-1] + [(f, i)] + fwd
                seen.update(chain)
                sizes = tuple(self.sides[g] for g, _ in chain)
                records.append(
                    VertexRecord(
                        vertex_id=len(records),
                        vertex_type=VertexType(sizes),
                        is_boundary=not closed,
                        corners=tuple(chain),
                        cyclic_sizes=sizes,
                    )
                )
        return tuple(records)

    @cached_property
    def corner_vertex(self) -> dict[tuple[int, int], int]:
        """Map ``(face_index, corner)`` to its vertex id."""
        return {c: v.vertex_id for v in self.vertices for c in v.corners}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def interior_vertices(self) -> tuple[VertexRecord, ...]:
        return tuple(v for v in self.vertices if not v.is_boundary)

    # -- misc ----------------------------------------------------------
    def face_neighbors(self, f: int) -> list[int]:
        out = []
        for i in range(self.sides[f]):
            p = self.alpha[self.offsets[f] + i]
            if p >= 0:
                out.append(self._face_of[p])
        return out

    def is_connected(self) -> bool:
        if not self.sides:
            return True
        seen = {0}
        todo = deque([0])
        while todo:
            f = todo.popleft()
            for g in self.face_neighbors(f):
                if g not in seen:
                    seen.add(g)
                    todo.append(g)
        return len(seen) == self.num_faces

    def gluing_data(self) -> GluingData:
        faces = tuple(zip(self.face_ids, self.sides))
        gl = []
        for d, p in self.edges:
            if p < 0:
                continue
            (f, i), (g, j) = self.slot(d), self.slot(p)
            gl.append(Gluing(Slot(self.face_ids[f], i), Slot(self.face_ids[g], j), self.flip[d]))
        return GluingData(faces, tuple(gl))

    def __repr__(self):
        return (
            f"PolygonalComplex(F={self.num_faces}, E={self.num_edges}, "
            f"V={self.num_vertices}, boundary_darts={len(self.boundary_darts)})"
        )


def build_complex(data: GluingData) -> PolygonalComplex:
    face_ids = []
    sides = []
    index = {}
    for fid, n in data.faces:
        if fid in index:
            raise ValidationError(f"duplicate face id {fid!r}")
        if int(n) != n or n < 3:
            raise BadSideCount(f"face {fid!r} has {n} sides; need at least 3")
        index[fid] = len(face_ids)
        face_ids.append(fid)
        sides.append(int(n))
    offsets = [0]
    for n in sides:
        offsets.append(offsets[-1] + n)
    alpha = [-1] * offsets[-1]
    flip = [True] * offsets[-1]

    def dart_of(slot: Slot) -> int:
        fid, i = slot.face_id, slot.side_index
        if fid not in index:
            raise UnknownSlot(f"slot {fid!r}:{i} names an unknown face")
        f = index[fid]
        if not (0 <= i < sides[f]):
            raise UnknownSlot(f"slot {fid!r}:{i} out of range for a {sides[f]}-gon")
        return offsets[f] + i

    for g in data.gluings:
        a, b = dart_of(g.a), dart_of(g.b)
        if a == b:
            raise SelfPairedSlot(f"slot {g.a.face_id!r}:{g.a.side_index} is paired with itself")
        for d, s in ((a, g.a), (b, g.b)):
            if alpha[d] >= 0:
                raise DuplicateSlot(f"slot {s.face_id!r}:{s.side_index} appears in two gluings")
        alpha[a], alpha[b] = b, a
        flip[a] = flip[b] = bool(g.reversed)
    return PolygonalComplex(face_ids, sides, alpha, flip)


def from_polygons(polygons: Iterable[Sequence[int]], face_ids: Sequence[FaceId] | None = None) -> GluingData:
    """Gluing data from faces given as vertex cycles (shared labels glue sides).

    A directed side ``u -> v`` is glued to the side ``v -> u`` of another
    face.  Sides whose reverse does not occur stay unpaired.
    """
    polygons = [tuple(p) for p in polygons]
    if face_ids is None:
        face_ids = list(range(len(polygons)))
    where: dict[tuple[int, int], tuple[FaceId, int]] = {}
    for fid, poly in zip(face_ids, polygons):
        n = len(poly)
        for i in range(n):
            key = (poly[i], poly[(i + 1) % n])
            if key in where:
                raise DuplicateSlot(f"directed side {key} occurs twice")
            where[key] = (fid, i)
    pairs = []
    for (u, v), a in where.items():
        b = where.get((v, u))
        if b is not None and (u, v) < (v, u):
            pairs.append((a, b))
    return GluingData.from_pairs(zip(face_ids, (len(p) for p in polygons)), pairs)


def vertex_records(cx: PolygonalComplex) -> tuple[VertexRecord, ...]:
    return cx.vertices


def is_edge_to_edge(cx: PolygonalComplex) -> EdgeToEdgeResult:
    """Two faces may share at most one edge; interior vertices need degree >= 3.

    Boundary vertices are not degree-checked (their links are incomplete).
    """
    shared: dict[tuple[int, int], int] = {}
    for d, p in cx.edges:
        if p < 0:
            continue
        f, g = cx.slot(d)[0], cx.slot(p)[0]
        key = (min(f, g), max(f, g))
        shared[key] = shared.get(key, 0) + 1
    for (f, g), count in sorted(shared.items()):
        if count >= 2:
            a, b = cx.face_ids[f], cx.face_ids[g]
            return EdgeToEdgeResult(False, f"faces {a!r} and {b!r} share {count} edges")
    for v in cx.vertices:
        if not v.is_boundary and v.degree < 3:
            return EdgeToEdgeResult(False, f"vertex {v.vertex_id} has degree {v.degree}")
    return EdgeToEdgeResult(True, None)


def orientation(cx: PolygonalComplex) -> list[int] | None:
    """Face orientations (+1/-1) making every gluing reversing, or ``None``."""
    sign = [0] * cx.num_faces
    for root in range(cx.num_faces):
        if sign[root]:
            continue
        sign[root] = 1
        todo = deque([root])
        while todo:
            f = todo.popleft()
            for i in range(cx.sides[f]):
                d = cx.offsets[f] + i
                p = cx.alpha[d]
                if p < 0:
                    continue
                g = cx.slot(p)[0]
                want = sign[f] if cx.flip[d] else -sign[f]
                if sign[g] == 0:
                    sign[g] = want
                    todo.append(g)
                elif sign[g] != want:
                    return None
    return sign


def is_orientable(cx: PolygonalComplex) -> bool:
    return orientation(cx) is not None
