"""Unit-side regular polygons on a sphere of radius ``r``.

A unit regular n-gon on the radius-``r`` sphere is a fan of ``n`` isosceles
triangles with apex angle ``2*pi/n`` and base 1.  Its base angle ``phi``
satisfies

    sin(phi)**2 = (1 + cos(2*pi/n)) / (1 + cos(1/r)),

which follows from the polar cosine rule ``cos A = -cos^2 B + sin^2 B cos a``.
The polygon exists for ``r > n / (2*pi)``, and its interior angle is
``2*phi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import VertexType
from .curvature import angle_sum
from .errors import BadN, NonConvergence, NotPositivelyCurved, RadiusTooSmall

TWO_PI = 2.0 * math.pi
R_TOL = 1e-12
MAX_BISECTIONS = 400


@dataclass(frozen=True)
class SphericalAngle:
    r: float
    n: int
    phi: float

    @property
    def interior_angle(self) -> float:
        return 2.0 * self.phi


@dataclass(frozen=True)
class SphericalPolygonSpec:
    r: float
    n: int
    phi: float
    interior_angle: float
    circumradius: float
    area: float


def min_radius(n: int) -> float:
    return n / TWO_PI


def _check(r: float, n: int) -> None:
    if int(n) != n or n < 3:
        raise BadN(f"n must be an integer >= 3, got {n}")
    if not (r > min_radius(n)):
        raise RadiusTooSmall(f"r={r} must exceed n/(2 pi) = {min_radius(n):.12g} for n={n}")


def sin2_target(r: float, n: int) -> float:
    return (1.0 + math.cos(TWO_PI / n)) / (1.0 + math.cos(1.0 / r))


def phi_S(r: float, n: int) -> SphericalAngle:
    """Base angle of the isosceles triangles making up the unit regular n-gon."""
    _check(r, n)
    rhs = sin2_target(r, n)
    # rhs <= 1 up to rounding right at the admissible boundary
    phi = math.asin(math.sqrt(min(rhs, 1.0)))
    return SphericalAngle(float(r), int(n), phi)


def angle_residual(a: SphericalAngle) -> float:
    """Relative residual of the defining equation at ``a.phi``."""
    rhs = sin2_target(a.r, a.n)
    return abs(math.sin(a.phi) ** 2 - rhs) / rhs


def _sizes(vt) -> tuple[int, ...]:
    return vt.sizes if isinstance(vt, VertexType) else tuple(VertexType(tuple(vt)).sizes)


def spherical_angle_sum(vt: VertexType | Sequence[int], r: float) -> float:
    sizes = _sizes(vt)
    for k in set(sizes):
        _check(r, k)
    return sum(2.0 * phi_S(r, k).phi for k in sizes)


def threshold_radius(vt: VertexType | Sequence[int], tol: float = R_TOL) -> float:
    """Radius where the spherical angle-sum of ``vt`` equals ``2*pi``.

    The angle-sum decreases in ``r`` toward the Euclidean angle-sum, so it
    crosses ``2*pi`` at most once.  When it is already below ``2*pi`` at
    the smallest admissible radius, that radius is returned.
    """
    sizes = _sizes(vt)
    if angle_sum(sizes).coefficient_of_pi >= 2:
        raise NotPositivelyCurved(f"{VertexType(sizes)} has Euclidean angle-sum >= 2 pi")
    lo = min_radius(max(sizes))
    # nudge off the boundary where the largest polygon degenerates
    lo_eval = lo * (1.0 + 1e-15) + 1e-300
    if spherical_angle_sum(sizes, lo_eval) < TWO_PI:
        return lo
    hi = 2.0 * lo
    doublings = 0
    while spherical_angle_sum(sizes, hi) >= TWO_PI:
        hi *= 2.0
        doublings += 1
        if doublings > 200:
            raise NonConvergence("could not bracket the threshold radius")
    lo = lo_eval
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol * max(1.0, hi):
            return hi
        mid = 0.5 * (lo + hi)
        if spherical_angle_sum(sizes, mid) >= TWO_PI:
            lo = mid
        else:
            hi = mid
    raise NonConvergence("bisection did not reach the requested tolerance")


def critical_radius(types: Iterable, margin: float = 0.01) -> float:
    """A radius at which every listed vertex-type has angle-sum below ``2*pi``.

    Largest per-type threshold, scaled by ``1 + margin``.  With
    ``margin == 0`` the strict inequality holds only up to the bisection
    tolerance.
    """
    if margin < 0:
        raise ValueError("margin must be non-negative")
    vts = [t if isinstance(t, VertexType) else VertexType(tuple(t)) for t in types]
    if not vts:
        raise NotPositivelyCurved("no vertex-types given")
    t0 = max(threshold_radius(t) for t in vts) * (1.0 + margin)
    if margin > 0:
        worst = max(vts, key=lambda t: spherical_angle_sum(t, t0))
        if spherical_angle_sum(worst, t0) >= TWO_PI:
            raise NonConvergence(f"angle-sum of {worst} is not below 2 pi at r={t0}")
    return t0


def spherical_excess(r: float, n: int) -> float:
    """``2 n phi - (n - 2) pi`` without cancellation at large ``r``.

    With ``a = sin(phi) = cos(pi/n)/cos(1/(2r))`` and ``b = cos(pi/n)`` (the
    Euclidean value), ``phi - phi_E = asin((a^2 - b^2) / (a cos(phi_E) + b cos(phi)))``
    and ``a^2 - b^2 = b^2 tan^2(1/(2r))``.
    """
    _check(r, n)
    b = math.cos(math.pi / n)
    a = min(b / math.cos(0.5 / r), 1.0)
    num = b * b * math.tan(0.5 / r) ** 2
    den = a * math.sin(math.pi / n) + b * math.sqrt(max(0.0, 1.0 - a * a))
    return 2.0 * n * math.asin(min(num / den, 1.0))


def polygon_spec(r: float, n: int) -> SphericalPolygonSpec:
    """Angles, circumradius (geodesic, centre to vertex) and area of the polygon.

    Circumradius from the right triangle centre / edge midpoint / vertex:
    ``sin(R/r) = sin(1/(2r)) / sin(pi/n)``.  Area is the spherical excess
    ``r^2 (n * 2 phi - (n - 2) pi)``.
    """
    a = phi_S(r, n)
    s = min(math.sin(0.5 / r) / math.sin(math.pi / n), 1.0)
    circ = r * math.asin(s)
    area = r * r * spherical_excess(r, n)
    return SphericalPolygonSpec(a.r, a.n, a.phi, 2.0 * a.phi, circ, area)


def euclidean_circumradius(n: int) -> float:
    return 1.0 / (2.0 * math.sin(math.pi / n))


def euclidean_area(n: int) -> float:
    return n / (4.0 * math.tan(math.pi / n))
