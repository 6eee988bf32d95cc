"""Exact angle-sums, combinatorial curvature and conformal-type classification.

Everything here is exact rational arithmetic (:class:`fractions.Fraction`);
signs of curvature decide the classification, so floats are never used.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .complex import PolygonalComplex, VertexType, is_orientable
from .errors import BadVertexType, EmptyProfile, NonOrientable


@dataclass(frozen=True)
class AngleSum:
    """Angle-sum as an exact multiple of pi."""

    coefficient_of_pi: Fraction

    def __float__(self):
        import math

        return float(self.coefficient_of_pi) * math.pi

    def __str__(self):
        return f"{self.coefficient_of_pi}*pi"


def _sizes(vt) -> tuple[int, ...]:
    if isinstance(vt, VertexType):
        return vt.sizes
    sizes = tuple(vt)
    if not sizes or any(int(k) != k or k < 3 for k in sizes):
        raise BadVertexType(f"face sizes must be integers >= 3, got {list(sizes)}")
    return tuple(int(k) for k in sizes)


def angle_sum(vt: VertexType | Sequence[int]) -> AngleSum:
    return AngleSum(sum((1 - Fraction(2, k) for k in _sizes(vt)), Fraction(0)))


def curvature(vt: VertexType | Sequence[int]) -> Fraction:
    """``1 - d/2 + sum(1/k_i)`` for a vertex of degree ``d``."""
    sizes = _sizes(vt)
    return 1 - Fraction(len(sizes), 2) + sum((Fraction(1, k) for k in sizes), Fraction(0))


class Sign(str, Enum):
    ALL_POSITIVE = "all_positive"
    ALL_ZERO = "all_zero"
    ALL_NEGATIVE = "all_negative"
    MIXED = "mixed"


@dataclass(frozen=True)
class CurvatureProfile:
    """Vertex-types to classify, with an optional bound on polygon size.

    Built either from a complex (interior vertices only) or from a declared
    set of vertex-types.
    """

    types: tuple[VertexType, ...]
    side_bound: int | None = None
    complex: PolygonalComplex | None = None

    @classmethod
    def from_types(cls, types: Iterable, side_bound: int | None = None) -> "CurvatureProfile":
        vts = tuple(sorted({t if isinstance(t, VertexType) else VertexType(tuple(t)) for t in types}))
        return cls(vts, side_bound)

    @classmethod
    def from_complex(cls, cx: PolygonalComplex, side_bound: int | None = None) -> "CurvatureProfile":
        """Interior vertex-types of ``cx``.

        A closed complex has finitely many polygons, so its largest face size
        is used as the side bound when none is given.
        """
        vts = tuple(sorted({v.vertex_type for v in cx.vertices if not v.is_boundary}))
        if side_bound is None and cx.is_closed and cx.sides:
            side_bound = max(cx.sides)
        return cls(vts, side_bound, cx)

    @property
    def curvatures(self) -> dict[VertexType, Fraction]:
        return {t: curvature(t) for t in self.types}

    @property
    def signs(self) -> Sign:
        ks = [curvature(t) for t in self.types]
        if ks and all(k > 0 for k in ks):
            return Sign.ALL_POSITIVE
        if ks and all(k == 0 for k in ks):
            return Sign.ALL_ZERO
        if ks and all(k < 0 for k in ks):
            return Sign.ALL_NEGATIVE
        return Sign.MIXED

    @property
    def min_curvature(self) -> Fraction | None:
        return min((curvature(t) for t in self.types), default=None)

    @property
    def max_curvature(self) -> Fraction | None:
        return max((curvature(t) for t in self.types), default=None)


class Verdict(str, Enum):
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class TypeVerdict:
    verdict: Verdict
    reason: str
    universal_cover: str | None = None
    note: str | None = None

    def __str__(self):
        return self.verdict.value


_COVER = {
    Verdict.ELLIPTIC: "Riemann sphere",
    Verdict.PARABOLIC: "complex plane",
    Verdict.HYPERBOLIC: "unit disc",
}


def classify(profile: CurvatureProfile) -> TypeVerdict:
    if profile.complex is not None and not is_orientable(profile.complex):
        raise NonOrientable("classification requires an orientable surface")
    if not profile.types:
        raise EmptyProfile("no (interior) vertices to classify")
    sign = profile.signs
    n = profile.side_bound
    note = None
    cx = profile.complex
    if cx is not None and cx.is_closed:
        from .gauss_bonnet import euler_characteristic

        if euler_characteristic(cx) <= 0:
            note = (
                "the verdict describes the universal cover of this closed surface, "
                "not the surface itself"
            )
    elif cx is not None:
        note = "boundary vertices were excluded; the verdict concerns the surface this ball samples"

    if sign is Sign.ALL_ZERO:
        v = Verdict.PARABOLIC
        reason = "combinatorial curvature is zero at every vertex"
    elif sign is Sign.ALL_POSITIVE:
        if n is None:
            return TypeVerdict(
                Verdict.INDETERMINATE,
                "curvature is positive everywhere but no bound on polygon sizes was given",
            )
        v = Verdict.ELLIPTIC
        reason = f"curvature >= {profile.min_curvature} > 0 at every vertex and polygons have at most {n} sides"
    elif sign is Sign.ALL_NEGATIVE:
        if n is None:
            return TypeVerdict(
                Verdict.INDETERMINATE,
                "curvature is negative everywhere but no bound on polygon sizes was given",
            )
        v = Verdict.HYPERBOLIC
        reason = f"curvature <= {profile.max_curvature} < 0 at every vertex and polygons have at most {n} sides"
    else:
        return TypeVerdict(
            Verdict.INDETERMINATE,
            "curvature signs are mixed; only uniformly signed profiles are decided",
        )
    return TypeVerdict(v, reason, _COVER[v], note)


@dataclass(frozen=True)
class ExclusionResult:
    excluded: frozenset[str]
    extremal_type: VertexType
    extremal_curvature: Fraction
    justification: str


def exclusion_check(min_sides: int, min_degree: int = 3) -> ExclusionResult:
    """Ambient surfaces ruling out edge-to-edge tilings by polygons of >= ``min_sides`` sides.

    Curvature is largest for the smallest admissible sizes and degree, so
    ``[min_sides] * min_degree`` is the extremal vertex-type.  If even that
    has non-positive curvature the sphere is impossible (curvature sums to
    2 on a sphere); if it is strictly negative the plane is impossible too.
    """
    if min_sides < 3:
        raise BadVertexType("min_sides must be at least 3")
    if min_degree < 1:
        raise BadVertexType("min_degree must be at least 1")
    ext = VertexType((min_sides,) * min_degree)
    k = curvature(ext)
    excluded = set()
    if k <= 0:
        excluded.add("sphere")
    if k < 0:
        excluded.add("plane")
    if k < 0:
        why = f"every admissible vertex-type has curvature <= {k} < 0 (extremal {ext})"
    elif k == 0:
        why = f"every admissible vertex-type has curvature <= 0 (extremal {ext} has curvature 0)"
    else:
        why = f"extremal type {ext} has positive curvature {k}; nothing is excluded"
    return ExclusionResult(frozenset(excluded), ext, k, why)
