"""Primitives of the upper half-plane model of the hyperbolic plane.

Points live in {(x, y): y > 0}. Geodesics are vertical rays and
semicircles centered on the boundary axis y = 0. The central trick of
this module is the boundary-center reduction: the geodesic through
P = (x, y) and an axis point (0, h) is the circle centered at

    ((x^2 + y^2 - h^2) / (2x), 0),

and the hyperbolic angle between two geodesics at P equals the
Euclidean angle between the corresponding radius vectors. Everything
downstream (locus sampling, witness search) is checked against the
angle predicate defined here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "GeometryError",
    "DegenerateInputError",
    "OffCurveError",
    "OnAxisError",
    "OrderingError",
    "HPoint",
    "AxisPoint",
    "VerticalRay",
    "Arc",
    "Geodesic",
    "AngleResidual",
    "geodesic_through",
    "tangent_direction",
    "hyp_angle",
    "equal_angle_residual",
    "hyp_distance",
    "axis_center",
    "axis_angle",
]

# Abscissa gap below which the connecting geodesic is treated as vertical;
# the arc center diverges as the abscissas coincide.
VERTICAL_EPS = 1e-12

# Relative tolerance for "P lies on G" checks.
ON_CURVE_RTOL = 1e-9


class GeometryError(ValueError):
    """Base class for domain errors raised by the geometry layer."""


class DegenerateInputError(GeometryError):
    """Two points that must be distinct coincide."""


class OffCurveError(GeometryError):
    """A point that must lie on a geodesic does not."""


class OnAxisError(GeometryError):
    """An operation that excludes the y-axis received a point with x = 0."""


class OrderingError(GeometryError):
    """Heights that must be strictly ordered are not."""


def _scale(*values: float) -> float:
    return max(1.0, *(abs(v) for v in values))


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise GeometryError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class HPoint:
    """A point of the upper half-plane (y strictly positive)."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        _check_finite("x", self.x)
        _check_finite("y", self.y)
        if self.y <= 0:
            raise GeometryError(f"HPoint requires y > 0, got y={self.y!r}")


@dataclass(frozen=True)
class AxisPoint:
    """A point (0, h) on the positive y-axis, stored by its height."""

    h: float

    def __post_init__(self):
        object.__setattr__(self, "h", float(self.h))
        _check_finite("h", self.h)
        if self.h <= 0:
            raise GeometryError(f"AxisPoint requires h > 0, got {self.h!r}")


@dataclass(frozen=True)
class VerticalRay:
    """Geodesic {x = x0, y > 0}."""

    x0: float


@dataclass(frozen=True)
class Arc:
    """Geodesic semicircle centered at (center, 0) with the given radius."""

    center: float
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise GeometryError(f"Arc radius must be positive, got {self.radius!r}")


Geodesic = Union[VerticalRay, Arc]


@dataclass(frozen=True)
class AngleResidual:
    """Difference of two unsigned angles at a common vertex, in radians."""

    value: float


def geodesic_through(p: HPoint, q: HPoint) -> Geodesic:
    """Geodesic through two distinct points.

    Near-equal abscissas (within VERTICAL_EPS relative) give a vertical
    ray; otherwise the perpendicular-bisector construction places the
    arc center at (q.x^2 + q.y^2 - p.x^2 - p.y^2) / (2 (q.x - p.x)).
    """
    if p.x == q.x and p.y == q.y:
        raise DegenerateInputError(f"cannot draw a geodesic through coincident points {p}")
    if abs(p.x - q.x) < VERTICAL_EPS * _scale(p.x, q.x):
        return VerticalRay(x0=p.x)
    center = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * (q.x - p.x))
    radius = math.hypot(p.x - center, p.y)
    return Arc(center=center, radius=radius)


def axis_center(x: float, y: float, h: float) -> float:
    """Center abscissa of the geodesic through (x, y) and the axis point (0, h)."""
    return (x * x + y * y - h * h) / (2.0 * x)


def _contains(g: Geodesic, p: HPoint) -> bool:
    if isinstance(g, VerticalRay):
        return abs(p.x - g.x0) <= ON_CURVE_RTOL * _scale(p.x, g.x0)
    d = math.hypot(p.x - g.center, p.y)
    return abs(d - g.radius) <= ON_CURVE_RTOL * _scale(g.radius)


def tangent_direction(g: Geodesic, p: HPoint) -> tuple[float, float]:
    """Unit tangent of g at p; orientation sign is unspecified.

    For an arc this is the radius vector (p.x - center, p.y) rotated a
    quarter turn, so the dot product with the radius is zero.
    """
    if not _contains(g, p):
        raise OffCurveError(f"{p} does not lie on {g}")
    if isinstance(g, VerticalRay):
        return (0.0, 1.0)
    tx, ty = -p.y, p.x - g.center
    norm = math.hypot(tx, ty)
    return (tx / norm, ty / norm)


def _oriented_tangent(p: HPoint, q: HPoint) -> tuple[float, float]:
    """Unit tangent at p of the geodesic through p and q, pointing toward q."""
    g = geodesic_through(p, q)
    if isinstance(g, VerticalRay):
        return (0.0, 1.0) if q.y > p.y else (0.0, -1.0)
    tx, ty = -p.y, p.x - g.center
    # pick the sign whose chord dot product is positive; it cannot vanish
    # because both endpoints sit strictly above the axis
    if tx * (q.x - p.x) + ty * (q.y - p.y) < 0.0:
        tx, ty = -tx, -ty
    norm = math.hypot(tx, ty)
    return (tx / norm, ty / norm)


def _unsigned_angle(u: tuple[float, float], v: tuple[float, float]) -> float:
    # atan2 of cross/dot is stable near 0 and pi, unlike acos of the dot
    cross = u[0] * v[1] - u[1] * v[0]
    dot = u[0] * v[0] + u[1] * v[1]
    return math.atan2(abs(cross), dot)


def hyp_angle(p: HPoint, q1: HPoint, q2: HPoint) -> float:
    """Hyperbolic angle at p between the geodesic rays toward q1 and q2.

    Tangents are oriented from p toward each target point, so the result
    is the unsigned ray angle in [0, pi]; opposite directions along one
    geodesic give pi.
    """
    if (p.x, p.y) == (q1.x, q1.y) or (p.x, p.y) == (q2.x, q2.y):
        raise DegenerateInputError("angle vertex coincides with a target point")
    if (q1.x, q1.y) == (q2.x, q2.y):
        raise DegenerateInputError("angle target points coincide")
    return _unsigned_angle(_oriented_tangent(p, q1), _oriented_tangent(p, q2))


def equal_angle_residual(p: HPoint, a: AxisPoint, b: AxisPoint, c: AxisPoint) -> AngleResidual:
    """Angle(a p b) minus angle(b p c) for axis points a > b > c.

    Zero exactly on the equal-angle locus of the triple. Points on the
    y-axis are rejected: there the three geodesics collapse into one.
    """
    if not (a.h > b.h > c.h):
        raise OrderingError(f"heights must satisfy a > b > c, got {a.h}, {b.h}, {c.h}")
    if p.x == 0.0:
        raise OnAxisError("the equal-angle locus excludes points on the y-axis")
    first = hyp_angle(p, HPoint(0.0, a.h), HPoint(0.0, b.h))
    second = hyp_angle(p, HPoint(0.0, b.h), HPoint(0.0, c.h))
    return AngleResidual(first - second)


def hyp_distance(p: HPoint, q: HPoint) -> float:
    """Hyperbolic distance arccosh(1 + |pq|^2 / (2 p.y q.y))."""
    d2 = (q.x - p.x) ** 2 + (q.y - p.y) ** 2
    return math.acosh(1.0 + d2 / (2.0 * p.y * q.y))


def axis_angle(x, y, h1, h2):
    """Angle at (x, y) between the geodesics toward axis points (0, h1), (0, h2).

    Vectorized boundary-center reduction: works elementwise on numpy
    arrays as well as on scalars. Requires x != 0. Agrees with hyp_angle
    to rounding error; exists so bulk consumers (curve sampling checks,
    witness search) avoid per-point object construction.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r2 = x * x + y * y
    m1 = (r2 - h1 * h1) / (2.0 * x)
    m2 = (r2 - h2 * h2) / (2.0 * x)
    v1x, v2x = x - m1, x - m2
    cross = v1x * y - y * v2x
    dot = v1x * v2x + y * y
    out = np.arctan2(np.abs(cross), dot)
    return float(out) if out.ndim == 0 else out
