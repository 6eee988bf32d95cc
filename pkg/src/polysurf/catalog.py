"""Enumeration of canonical vertex-types by curvature sign.

With face sizes bounded by ``N``, positively curved and flat vertices have
degree at most 6 (for ``d >= 7`` and ``k_i >= 3`` the curvature is at most
``1 - 7/2 + 7/3 < 0``), so those catalogues are finite.  Negative curvature
needs an explicit degree cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from .complex import VertexType, canonical_form
from .curvature import curvature
from .errors import BadParameters, EmptyCatalog, UnboundedQuery

SIGNS = ("positive", "zero", "negative")
_ALIASES = {"pos": "positive", "neg": "negative", "+": "positive", "-": "negative", "0": "zero"}
FLAT_DEGREE_CAP = 6


@dataclass(frozen=True)
class CatalogQuery:
    side_bound: int
    sign: str
    degree_min: int = 3
    degree_max: int | None = None

    def __post_init__(self):
        sign = _ALIASES.get(self.sign, self.sign)
        if sign not in SIGNS:
            raise BadParameters(f"sign must be one of {SIGNS}, got {self.sign!r}")
        object.__setattr__(self, "sign", sign)
        if self.side_bound < 3:
            raise BadParameters("side bound N must be at least 3")
        if self.degree_min < 1:
            raise BadParameters("degree_min must be at least 1")

    def degree_range(self) -> range:
        hi = self.degree_max
        if hi is None:
            if self.sign == "negative":
                raise UnboundedQuery("negative-curvature catalogues need degree_max")
            hi = FLAT_DEGREE_CAP
        return range(self.degree_min, hi + 1)


def canonicalize(seq: Sequence[int]) -> VertexType:
    return VertexType(tuple(seq))


def _sign_ok(k: Fraction, sign: str) -> bool:
    return k > 0 if sign == "positive" else k == 0 if sign == "zero" else k < 0


def _necklaces(multiset: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Distinct dihedral classes of arrangements of a sorted multiset."""
    out: set[tuple[int, ...]] = set()
    counts: dict[int, int] = {}
    for k in multiset:
        counts[k] = counts.get(k, 0) + 1
    keys = sorted(counts)
    d = len(multiset)
    first = keys[0]
    # pin the smallest value in front; every class has such a rotation
    counts[first] -= 1
    prefix = [first]

    def rec():
        if len(prefix) == d:
            out.add(canonical_form(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec()
                prefix.pop()
                counts[k] += 1

    rec()
    return out


def enumerate_vertex_types(q: CatalogQuery) -> list[VertexType]:
    result: set[tuple[int, ...]] = set()
    for d in q.degree_range():
        for ms in combinations_with_replacement(range(3, q.side_bound + 1), d):
            if _sign_ok(curvature(ms), q.sign):
                result |= _necklaces(ms)
    return [VertexType(t) for t in sorted(result)]


def extremal_curvature(q: CatalogQuery) -> tuple[VertexType, Fraction]:
    """Least positive curvature, or the negative curvature closest to zero.

    Ties are broken by the lexicographically first type.
    """
    types = enumerate_vertex_types(q)
    if not types:
        raise EmptyCatalog(f"no vertex-types match {q}")
    ks = [(curvature(t), t) for t in types]
    if q.sign == "negative":
        best = max(k for k, _ in ks)
    else:
        best = min(k for k, _ in ks)
    for k, t in ks:
        if k == best:
            return t, k
    raise AssertionError("unreachable")

