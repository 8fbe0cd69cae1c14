"""Floating-point geometric predicates: angles, empty regions, diamonds.

Everything here works on plain 2-D coordinates. Edge tests are strict: a
witness point blocks an edge only if it sees the edge under an angle that
exceeds the threshold by more than ``ANGLE_TOL``.
"""

from __future__ import annotations

import math
from collections import namedtuple
from dataclasses import dataclass

import numpy as np

ANGLE_TOL = 1e-9
COINCIDENT_TOL = 1e-12


class GeometryError(ValueError):
    """Raised for degenerate input such as coincident points."""


_PointBase = namedtuple("_PointBase", ["x", "y"])


class Point(_PointBase):
    """A finite 2-D point. Behaves like a ``(x, y)`` tuple."""

    __slots__ = ()

    def __new__(cls, x, y):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise GeometryError(f"non-finite coordinate ({x}, {y})")
        return super().__new__(cls, x, y)


def as_point(p) -> Point:
    return p if isinstance(p, Point) else Point(*p)


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def angle_at(apex, a, b) -> float:
    """Interior angle a-apex-b in radians, in [0, pi].

    Uses atan2(|cross|, dot) so the result stays accurate near 0 and pi.
    """
    ux, uy = a[0] - apex[0], a[1] - apex[1]
    vx, vy = b[0] - apex[0], b[1] - apex[1]
    if math.hypot(ux, uy) <= COINCIDENT_TOL or math.hypot(vx, vy) <= COINCIDENT_TOL:
        raise GeometryError("angle undefined: apex coincides with an endpoint")
    # abs() of the cross product makes the result symmetric in a and b
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def angles_at(apexes: np.ndarray, a, b) -> np.ndarray:
    """Vectorised :func:`angle_at` for an ``(m, 2)`` array of apexes.

    No degeneracy check; apexes equal to ``a`` or ``b`` give angle 0.
    """
    apexes = np.asarray(apexes, dtype=float)
    ux = a[0] - apexes[..., 0]
    uy = a[1] - apexes[..., 1]
    vx = b[0] - apexes[..., 0]
    vy = b[1] - apexes[..., 1]
    return np.arctan2(np.abs(ux * vy - uy * vx), ux * vx + uy * vy)


def angle_threshold(beta: float) -> float:
    """Witness angle above which a point blocks an edge of the beta-skeleton.

    ``asin(1/beta)`` for beta > 1 and ``pi - asin(beta)`` for beta <= 1; both
    branches give pi/2 at beta = 1.
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    if beta > 1:
        return math.asin(1.0 / beta)
    return math.pi - math.asin(beta)


@dataclass(frozen=True)
class AngleParams:
    beta: float
    theta_threshold: float

    @classmethod
    def from_beta(cls, beta: float) -> "AngleParams":
        return cls(float(beta), angle_threshold(beta))

    def blocks(self, angle: float) -> bool:
        return angle > self.theta_threshold + ANGLE_TOL


def _region_circles(a, b, beta: float):
    """Centres and radius of the two circles bounding the empty region.

    Both circles pass through a and b; their centres sit on the
    perpendicular bisector at distance ``offset`` on either side.
    """
    d = dist(a, b)
    if d <= COINCIDENT_TOL:
        raise GeometryError("degenerate segment: endpoints coincide")
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    radius = 0.5 * d * (beta if beta >= 1 else 1.0 / beta)
    offset = math.sqrt(max(radius * radius - 0.25 * d * d, 0.0))
    mx, my = 0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])
    nx, ny = -(b[1] - a[1]) / d, (b[0] - a[0]) / d
    c1 = (mx + offset * nx, my + offset * ny)
    c2 = (mx - offset * nx, my - offset * ny)
    return c1, c2, radius


def region_contains(a, b, beta: float, p) -> bool:
    """True iff ``p`` lies strictly inside the open empty region of edge ab.

    beta > 1: union of the two circles of diameter ``beta*|ab|`` through a, b.
    beta = 1: the open disk with diameter ab.
    beta < 1: the lens formed by intersecting two circles of diameter
    ``|ab|/beta`` through a and b.
    """
    c1, c2, radius = _region_circles(a, b, beta)
    in1 = dist(p, c1) < radius
    in2 = dist(p, c2) < radius
    if beta > 1:
        return in1 or in2
    return in1 and in2


def region_boundary_distance(a, b, beta: float, p) -> float:
    """Lower bound on the distance from ``p`` to the region boundary."""
    c1, c2, radius = _region_circles(a, b, beta)
    return min(abs(dist(p, c1) - radius), abs(dist(p, c2) - radius))


@dataclass(frozen=True)
class Diamond:
    """Rhombus with diagonal ab and interior angle ``apex_angle`` at a and b."""

    endpoint_a: Point
    endpoint_b: Point
    apex_angle: float

    def __post_init__(self):
        object.__setattr__(self, "endpoint_a", as_point(self.endpoint_a))
        object.__setattr__(self, "endpoint_b", as_point(self.endpoint_b))
        if dist(self.endpoint_a, self.endpoint_b) <= COINCIDENT_TOL:
            raise GeometryError("diamond endpoints coincide")
        if not 0 < self.apex_angle < math.pi:
            raise ValueError(f"apex_angle must be in (0, pi), got {self.apex_angle}")

    def corners(self) -> list[Point]:
        """Corners in order a, left apex, b, right apex."""
        a, b = self.endpoint_a, self.endpoint_b
        h = 0.5 * math.tan(0.5 * self.apex_angle)
        dx, dy = b.x - a.x, b.y - a.y
        mx, my = 0.5 * (a.x + b.x), 0.5 * (a.y + b.y)
        return [a, Point(mx - h * dy, my + h * dx), b, Point(mx + h * dy, my - h * dx)]


def diamond_contains(d: Diamond, p, tol: float = 1e-9) -> bool:
    """Closed containment test; ``tol`` is relative to the diagonal length."""
    return bool(diamond_contains_many(d.endpoint_a, d.endpoint_b, d.apex_angle, np.asarray([p], dtype=float), tol)[0])


def diamond_contains_many(a, b, apex_angle: float, pts: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Vectorised closed diamond test for an ``(m, 2)`` array of points.

    Works in the frame where a is the origin and b lies on the positive
    x-axis at ``t = 1``: the diamond is ``|v| <= tan(apex/2) * min(t, 1 - t)``.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ab = b - a
    L2 = float(ab @ ab)
    rel = np.asarray(pts, dtype=float) - a
    t = (rel @ ab) / L2
    v = (rel[:, 1] * ab[0] - rel[:, 0] * ab[1]) / L2
    slope = math.tan(0.5 * apex_angle)
    return np.abs(v) <= slope * np.minimum(t, 1.0 - t) + tol
