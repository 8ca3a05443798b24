"""Planar geometry for the symmetric quadratic Bezier family.

Linear and quadratic Bezier evaluation for control points (p, q),
(0, 0), (q, p); the chord family joining the two control rays; ray
projections; and the endpoint-based segment distance used to compare a
replacement segment against a chord.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Point2:
    """A point (or vector) in the plane."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"coordinates must be finite (got {self.x}, {self.y})")

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scaled(self, k: float) -> "Point2":
        return Point2(k * self.x, k * self.y)

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True, slots=True)
class Segment:
    """An ordered pair of endpoints; zero length is permitted."""

    start: Point2
    end: Point2

    def point_at(self, t: float) -> Point2:
        return linear_bezier(self.start, self.end, t)

    def length(self) -> float:
        return self.start.distance_to(self.end)

    def reversed(self) -> "Segment":
        return Segment(self.end, self.start)


@dataclass(frozen=True, slots=True)
class QuadBezier:
    """The quadratic Bezier curve with control points (p, q), (0, 0), (q, p).

    p == q collapses the curve onto a straight path; such curves are
    permitted but flagged degenerate so callers can report rather than
    crash.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise DomainError(f"curve needs p >= 1 (got p = {self.p})")
        if self.q < 0:
            raise DomainError(f"curve needs q >= 0 (got q = {self.q})")

    @property
    def is_degenerate(self) -> bool:
        return self.p == self.q

    def control_points(self) -> tuple[Point2, Point2, Point2]:
        return (
            Point2(float(self.p), float(self.q)),
            Point2(0.0, 0.0),
            Point2(float(self.q), float(self.p)),
        )


class RayProjection(NamedTuple):
    t: float
    foot: Point2


def linear_bezier(a: Point2, b: Point2, t: float) -> Point2:
    """The affine path (1-t)*a + t*b (t outside [0,1] extrapolates)."""
    u = 1.0 - t
    return Point2(u * a.x + t * b.x, u * a.y + t * b.y)


def alpha(curve: QuadBezier, t: float) -> Point2:
    """First control ray: (1-t)*(p, q), from (p, q) down to the origin."""
    u = 1.0 - t
    return Point2(u * curve.p, u * curve.q)


def beta(curve: QuadBezier, t: float) -> Point2:
    """Second control ray: t*(q, p), from the origin out to (q, p)."""
    return Point2(t * curve.q, t * curve.p)


def gamma(curve: QuadBezier, s: float, t: float) -> Point2:
    """Point at parameter t on the chord from alpha(s) to beta(s).

    The chord at s is tangent to the curve at parameter s; the curve is
    the envelope of this family.
    """
    return linear_bezier(alpha(curve, s), beta(curve, s), t)


def quad_point(curve: QuadBezier, t: float) -> Point2:
    """Curve point (1-t)^2 * (p, q) + t^2 * (q, p)."""
    u = 1.0 - t
    return Point2(
        u * u * curve.p + t * t * curve.q,
        u * u * curve.q + t * t * curve.p,
    )


def tangent_segment(curve: QuadBezier, t0: float) -> Segment:
    """The chord from alpha(t0) to beta(t0); tangent to the curve at t0.

    Its affine parametrization coincides with gamma(curve, t0, .).
    """
    if not 0.0 < t0 < 1.0:
        raise DomainError(
            f"tangent parameter must lie strictly between 0 and 1 (got {t0})"
        )
    return Segment(alpha(curve, t0), beta(curve, t0))


def project_onto_ray(point: Point2, direction: Point2) -> RayProjection:
    """Orthogonal projection onto the line through the origin.

    Returns t = point.direction / ||direction||^2 and the foot
    t*direction, the closest point on the line.
    """
    dd = direction.dot(direction)
    if dd == 0.0:
        raise DomainError("cannot project onto a zero direction")
    t = point.dot(direction) / dd
    return RayProjection(t, direction.scaled(t))


def dist_to_origin_line(point: Point2, direction: Point2) -> float:
    """Distance from a point to the line through the origin with `direction`.

    |x*dy - y*dx| / ||direction||.
    """
    n = direction.norm()
    if n == 0.0:
        raise DomainError("line direction must be nonzero")
    return abs(point.x * direction.y - point.y * direction.x) / n


def segment_distance(l1: Segment, l2: Segment) -> float:
    """Endpoint max-of-mins distance from l1 to l2.

    max over l1's endpoints of the min distance to l2's endpoints.
    Asymmetric in general (the first argument is outermost), and not
    the Hausdorff distance; see segment_distance_symmetric for a
    symmetrized diagnostic.
    """
    d_start = min(l1.start.distance_to(l2.start), l1.start.distance_to(l2.end))
    d_end = min(l1.end.distance_to(l2.start), l1.end.distance_to(l2.end))
    return max(d_start, d_end)


def segment_distance_symmetric(l1: Segment, l2: Segment) -> float:
    """Max of segment_distance over both argument orders (diagnostic)."""
    return max(segment_distance(l1, l2), segment_distance(l2, l1))


def scale_tolerance(p: float, q: float) -> float:
    """Float comparison tolerance for geometry at the scale of (p, q).

    Absolute at unit scale, relative beyond it.
    """
    return 1e-9 * max(1.0, math.hypot(p, q))
