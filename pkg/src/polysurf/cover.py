"""Finite balls of universal covers by face-by-face development.

Faces are attached across free sides following the base gluing pattern.
Two cover faces are identified along a side *only* when the corner fan
around a cover vertex has collected as many corners as the base vertex has;
the two free sides at the ends of the fan are then glued.  No other
identification ever happens, which is what makes the development simply
connected.

Growth proceeds by completing boundary vertices one at a time, so the
developed region stays a topological disc (or closes into a sphere).  The
ball of a given generation is cut out afterwards using dual-graph BFS
depths, once every face up to that depth has all of its sides glued.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complex import GluingData, Gluing, PolygonalComplex, Slot, build_complex, is_orientable
from .errors import DevelopmentError, HasBoundary, LimitTooSmall, MismatchedBase, NonOrientable

Corner = tuple[int, int]

HARD_FACE_CAP = 2_000_000


class _ComplexRule:
    """Development rule read off a closed, coherently oriented complex."""

    def __init__(self, base: PolygonalComplex):
        self.base = base
        self._degree = {}
        for v in base.vertices:
            for c in v.corners:
                self._degree[c] = len(v.corners)

    def sides(self, bf: int) -> int:
        return self.base.sides[bf]

    def across(self, bf: int, i: int) -> tuple[int, int]:
        return self.base.slot(self.base.alpha[self.base.offsets[bf] + i])

    def degree(self, bf: int, i: int) -> int:
        return self._degree[(bf, i)]

    checks_pairs = True


class _RegularRule:
    """Abstract {p, q} tessellation: every face a p-gon, every vertex degree q."""

    checks_pairs = False

    def __init__(self, p: int, q: int):
        self.p, self.q = p, q

    def sides(self, bf: int) -> int:
        return self.p

    def across(self, bf: int, i: int) -> tuple[int, int]:
        return 0, 0

    def degree(self, bf: int, i: int) -> int:
        return self.q


@dataclass
class _Fan:
    corners: deque
    degree: int
    closed: bool = False


class _Development:
    """Mutable development state; see the module docstring."""

    def __init__(self, rule, seed_face: int = 0):
        self.rule = rule
        self.base_face: list[int] = []
        self.sides: list[int] = []
        self.alpha: dict[Corner, Corner] = {}
        self.fan_of: dict[Corner, _Fan] = {}
        self._check: list[_Fan] = []
        self.new_face(seed_face)
        self._settle()

    # -- primitive steps ---------------------------------------------------
    def new_face(self, bf: int) -> int:
        F = len(self.sides)
        n = self.rule.sides(bf)
        self.base_face.append(bf)
        self.sides.append(n)
        for i in range(n):
            fan = _Fan(deque([(F, i)]), self.rule.degree(bf, i))
            self.fan_of[(F, i)] = fan
            self._check.append(fan)
        return F

    def _join(self, tail: Corner, head: Corner) -> None:
        """Corner ``head`` follows ``tail`` around their common vertex."""
        a, b = self.fan_of[tail], self.fan_of[head]
        if a.closed or b.closed or a.corners[-1] != tail or b.corners[0] != head:
            raise DevelopmentError(f"cannot join corners {tail} -> {head}")
        if a is b:
            a.closed = True
            if len(a.corners) != a.degree:
                raise DevelopmentError(
                    f"vertex link closed with {len(a.corners)} corners, expected {a.degree}"
                )
            return
        for c in b.corners:
            self.fan_of[c] = a
        a.corners.extend(b.corners)
        self._check.append(a)

    def glue(self, x: Corner, y: Corner) -> None:
        self._glue_one(x, y)
        self._settle()

    def _glue_one(self, x: Corner, y: Corner) -> None:
        (F, i), (G, j) = x, y
        if x in self.alpha or y in self.alpha:
            raise DevelopmentError(f"side {x} or {y} is already glued")
        if self.rule.checks_pairs:
            want = self.rule.across(self.base_face[F], i)
            if want != (self.base_face[G], j):
                raise DevelopmentError(f"gluing {x}~{y} does not project to a base gluing")
        self.alpha[x] = y
        self.alpha[y] = x
        nF, nG = self.sides[F], self.sides[G]
        # reversed gluing: origin of x meets end of y and vice versa
        self._join((F, i), (G, (j + 1) % nG))
        self._join((G, j), (F, (i + 1) % nF))

    def _settle(self) -> None:
        while self._check:
            fan = self._check.pop()
            if fan.closed or len(fan.corners) < fan.degree:
                continue
            if len(fan.corners) > fan.degree:
                raise DevelopmentError("vertex fan exceeds the base degree")
            (L, l) = fan.corners[-1]
            (S, s) = fan.corners[0]
            self._glue_one((L, l), (S, (s - 1) % self.sides[S]))

    def complete_vertex(self, corner: Corner) -> None:
        fan = self.fan_of[corner]
        while not fan.closed:
            if len(self.sides) > HARD_FACE_CAP:
                raise DevelopmentError("development exceeded the hard face cap")
            L, l = fan.corners[-1]
            bg, j = self.rule.across(self.base_face[L], l)
            N = self.new_face(bg)
            self.glue((L, l), (N, j))
            fan = self.fan_of[corner]

    # -- queries -------------------------------------------------------------
    def free_sides(self, F: int) -> list[int]:
        return [i for i in range(self.sides[F]) if (F, i) not in self.alpha]

    def is_closed(self) -> bool:
        return all(fan.closed for fan in self.fan_of.values())

    def generations(self) -> list[int]:
        gen = [-1] * len(self.sides)
        gen[0] = 0
        todo = deque([0])
        while todo:
            F = todo.popleft()
            for i in range(self.sides[F]):
                y = self.alpha.get((F, i))
                if y is not None and gen[y[0]] < 0:
                    gen[y[0]] = gen[F] + 1
                    todo.append(y[0])
        return gen

    def grow_to_generation(self, G: int) -> list[int]:
        """Grow until every face of BFS depth <= G has no free side."""
        while True:
            gen = self.generations()
            bad = sorted(
                (gen[F], F) for F in range(len(self.sides)) if 0 <= gen[F] <= G and self.free_sides(F)
            )
            if not bad:
                return gen
            for _, F in bad:
                for i in range(self.sides[F]):
                    if not self.fan_of[(F, i)].closed:
                        self.complete_vertex((F, i))

    def grow_rim(self, faces: list[int]) -> None:
        for F in faces:
            for i in range(self.sides[F]):
                if not self.fan_of[(F, i)].closed:
                    self.complete_vertex((F, i))

    def extract(self, keep: list[int]):
        """Induced sub-complex on ``keep`` (in that order), renumbered 0..n-1."""
        new = {F: k for k, F in enumerate(keep)}
        faces = tuple((k, self.sides[F]) for k, F in enumerate(keep))
        gl = []
        for (F, i), (G, j) in self.alpha.items():
            if F in new and G in new and (F, i) < (G, j):
                gl.append(Gluing(Slot(new[F], i), Slot(new[G], j)))
        gl.sort(key=lambda g: (g.a.face_id, g.a.side_index))
        return GluingData(faces, tuple(gl))


@dataclass(frozen=True)
class CoverBall:
    cover_complex: PolygonalComplex
    face_projection: tuple[int, ...]
    generation: tuple[int, ...]
    halted_by: str  # "closure" or "limit"
    base: PolygonalComplex | None = field(default=None, repr=False)

    def project_dart(self, d: int) -> int:
        F, i = self.cover_complex.slot(d)
        if self.base is None:
            raise MismatchedBase("this ball has no base complex")
        return self.base.dart(self.face_projection[F], i)

    @property
    def projection(self) -> dict[int, int]:
        return {d: self.project_dart(d) for d in range(self.cover_complex.n_darts)}

    def faces_per_generation(self) -> list[int]:
        counts = [0] * (max(self.generation) + 1)
        for g in self.generation:
            counts[g] += 1
        return counts


def _check_base(base: PolygonalComplex) -> None:
    if not base.is_closed:
        raise HasBoundary("the base complex must be closed")
    if not is_orientable(base):
        raise NonOrientable("the base complex must be orientable")
    if not all(base.flip):
        raise NonOrientable(
            "development needs coherently oriented faces (every gluing reversed=true)"
        )
    if not base.is_connected():
        raise MismatchedBase("the base complex must be connected")


def _develop(rule, max_faces=None, max_generation=None, complete_rim=False, seed_face=0):
    if max_faces is None and max_generation is None:
        raise LimitTooSmall("give max_faces or max_generation")
    if max_faces is not None and max_faces < 1:
        raise LimitTooSmall("max_faces must be at least 1")
    if max_generation is not None and max_generation < 0:
        raise LimitTooSmall("max_generation must be non-negative")
    dev = _Development(rule, seed_face)
    if max_generation is not None:
        gen = dev.grow_to_generation(max_generation)
        keep = [F for F in range(len(gen)) if 0 <= gen[F] <= max_generation]
        if complete_rim:
            dev.grow_rim(keep)
            kept = set(keep)
            gen = dev.generations()
            rim = sorted(
                {
                    c[0]
                    for F in keep
                    for i in range(dev.sides[F])
                    for c in dev.fan_of[(F, i)].corners
                    if c[0] not in kept
                },
                key=lambda F: (gen[F], F),
            )
            keep = keep + rim
    else:
        G = 0
        while True:
            gen = dev.grow_to_generation(G)
            inside = sum(1 for g in gen if 0 <= g <= G)
            if dev.is_closed() or inside >= max_faces:
                break
            G += 1
        keep = list(range(len(gen))) if dev.is_closed() else [F for F in range(len(gen)) if 0 <= gen[F] <= G]
    gen = dev.generations()
    keep.sort(key=lambda F: (gen[F], F))
    if max_faces is not None:
        keep = keep[:max_faces]
    closed = dev.is_closed() and len(keep) == len(dev.sides)
    data = dev.extract(keep)
    return build_complex(data), tuple(dev.base_face[F] for F in keep), tuple(gen[F] for F in keep), closed


def develop_universal_cover(
    base: PolygonalComplex,
    max_faces: int | None = None,
    max_generation: int | None = None,
    seed_face: int = 0,
) -> CoverBall:
    """Develop a finite ball of the universal cover of ``base``.

    Exactly one of ``max_faces`` / ``max_generation`` is normally given.  A
    sphere develops completely (``halted_by == "closure"``); any other base
    stops at the limit.
    """
    _check_base(base)
    cx, proj, gen, closed = _develop(_ComplexRule(base), max_faces, max_generation, seed_face=seed_face)
    return CoverBall(cx, proj, gen, "closure" if closed else "limit", base)


def regular_ball(p: int, q: int, radius: int, complete_rim: bool = False) -> tuple[PolygonalComplex, tuple[int, ...]]:
    """Ball of the {p, q} tessellation: all faces within dual distance ``radius``."""
    cx, _, gen, _ = _develop(_RegularRule(p, q), max_generation=radius, complete_rim=complete_rim)
    return cx, gen


@dataclass
class CoveringReport:
    ok: bool
    violations: list[str]
    interior_vertices_checked: int = 0


def verify_covering(ball: CoverBall, base: PolygonalComplex) -> CoveringReport:
    """Check that the projection commutes with the gluing maps and preserves
    side counts and interior vertex links."""
    cx = ball.cover_complex
    proj = ball.face_projection
    if len(proj) != cx.num_faces or any(not (0 <= b < base.num_faces) for b in proj):
        raise MismatchedBase("projection does not map into the base faces")
    bad: list[str] = []
    for F in range(cx.num_faces):
        if cx.sides[F] != base.sides[proj[F]]:
            bad.append(f"face {F}: {cx.sides[F]} sides but image face {proj[F]} has {base.sides[proj[F]]}")
    for d, p in cx.edges:
        if p < 0:
            continue
        (F, i), (G, j) = cx.slot(d), cx.slot(p)
        ok = i < base.sides[proj[F]] and j < base.sides[proj[G]]
        if ok:
            bd = base.dart(proj[F], i)
            ok = base.alpha[bd] == base.dart(proj[G], j) and base.flip[bd] == cx.flip[d]
        if not ok:
            bad.append(f"dart ({F},{i})~({G},{j}) projects to ({proj[F]},{i})~({proj[G]},{j}), not a base gluing")
    checked = 0
    base_cycle = {}
    for v in base.vertices:
        for k, c in enumerate(v.corners):
            base_cycle[c] = (v, k)
    for v in cx.vertices:
        if v.is_boundary:
            continue
        checked += 1
        image = [(proj[F], i) for F, i in v.corners]
        hit = base_cycle.get(image[0])
        ok = hit is not None
        if ok:
            bv, k = hit
            ring = bv.corners[k:] + bv.corners[:k]
            ok = tuple(image) == ring
        if not ok:
            bad.append(f"cover vertex {v.vertex_id} (type {v.vertex_type}) does not map onto a base vertex link")
    return CoveringReport(not bad, bad, checked)


def isomorphic_rooted(a: PolygonalComplex, ra: int, b: PolygonalComplex, rb: int) -> bool:
    """Orientation-preserving isomorphism sending face ``ra`` to face ``rb``.

    Tries every rotation of the root and propagates across gluings.
    """
    if a.num_faces != b.num_faces or a.sides[ra] != b.sides[rb]:
        return False
    for shift in range(a.sides[ra]):
        fmap = {ra: (rb, shift)}
        todo = deque([ra])
        ok = True
        while todo and ok:
            F = todo.popleft()
            G, s = fmap[F]
            if a.sides[F] != b.sides[G]:
                ok = False
                break
            for i in range(a.sides[F]):
                pa = a.alpha[a.dart(F, i)]
                pb = b.alpha[b.dart(G, i + s)]
                if (pa < 0) != (pb < 0):
                    ok = False
                    break
                if pa < 0:
                    continue
                (F2, j), (G2, k) = a.slot(pa), b.slot(pb)
                want = (G2, (k - j) % b.sides[G2])
                if F2 in fmap:
                    if fmap[F2] != want:
                        ok = False
                        break
                else:
                    fmap[F2] = want
                    todo.append(F2)
        if ok and len({g for g, _ in fmap.values()}) == a.num_faces == len(fmap):
            return True
    return False
