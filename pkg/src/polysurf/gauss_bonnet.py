"""Euler characteristic and the discrete Gauss-Bonnet identity."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex import PolygonalComplex
from .curvature import curvature
from .errors import HasBoundary, NonPositiveC0


@dataclass(frozen=True)
class GaussBonnetReport:
    V: int
    E: int
    F: int
    chi_euler: int
    curvature_sum: Fraction
    consistent: bool


def _require_closed(cx: PolygonalComplex) -> None:
    if not cx.is_closed:
        raise HasBoundary(f"complex has {len(cx.boundary_darts)} unpaired sides")


def euler_characteristic(cx: PolygonalComplex) -> int:
    _require_closed(cx)
    return cx.num_vertices - cx.num_edges + cx.num_faces


def curvature_sum(cx: PolygonalComplex) -> Fraction:
    _require_closed(cx)
    return sum((curvature(v.cyclic_sizes) for v in cx.vertices), Fraction(0))


def check_gauss_bonnet(cx: PolygonalComplex) -> GaussBonnetReport:
    chi = euler_characteristic(cx)
    total = curvature_sum(cx)
    return GaussBonnetReport(
        V=cx.num_vertices,
        E=cx.num_edges,
        F=cx.num_faces,
        chi_euler=chi,
        curvature_sum=total,
        consistent=chi == total,
    )


def vertex_bound(c0: Fraction | int | str) -> Fraction:
    """Most vertices a closed surface can have when every curvature is >= ``c0``.

    Curvatures sum to the Euler characteristic, which is at most 2.
    """
    c0 = Fraction(c0)
    if c0 <= 0:
        raise NonPositiveC0(f"c0 must be positive, got {c0}")
    return 2 / c0
