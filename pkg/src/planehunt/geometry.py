"""Planar primitives: points, segments, and first-contact times.

Everything here is a pure function over immutable values, safe to call
from any number of workers.
"""

import math
from dataclasses import dataclass

# Tolerances (see module notes): a quadratic root is accepted when the
# residual of the discriminant is within ROOT_TOL of zero; reported
# contact times are meaningful to TIME_TOL.
ROOT_TOL = 1e-12
TIME_TOL = 1e-9

# Relative motion slower than sqrt(LINEAR_EPS) is treated as constant
# distance; avoids catastrophic cancellation in the quadratic.
LINEAR_EPS = 1e-18


@dataclass(frozen=True)
class Point:
    """A position or displacement in the plane (length units)."""

    x: float
    y: float

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, s):
        return Point(self.x * s, self.y * s)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def norm(self):
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class Segment:
    """A line segment; a == b is allowed (degenerate point-segment)."""

    a: Point
    b: Point


def point_segment_distance(p, s):
    """Minimum Euclidean distance from point p to segment s."""
    d = s.b - s.a
    len2 = d.dot(d)
    if len2 == 0.0:
        return (p - s.a).norm()
    t = (p - s.a).dot(d) / len2
    t = min(1.0, max(0.0, t))
    closest = s.a + d.scaled(t)
    return (p - closest).norm()


def first_contact_time(p0, u, q0, w, r, horizon):
    """Earliest t in [0, horizon] with |(p0 + u t) - (q0 + w t)| <= r.

    Sensing is non-strict (<= r).  Returns None when the two points never
    come within r before the horizon.  Both points move at constant
    velocity, so contact reduces to a quadratic in t.
    """
    if r <= 0:
        raise ValueError("sensing radius must be positive")
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    d0 = q0 - p0
    rel = w - u
    c = d0.dot(d0) - r * r
    if c <= 0.0:
        return 0.0
    a = rel.dot(rel)
    if a < LINEAR_EPS:
        # constant separation beyond r
        return None
    b = 2.0 * d0.dot(rel)
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        # accept a graze whose residual is within rounding of zero
        scale = max(b * b, abs(4.0 * a * c), 1.0)
        if disc < -ROOT_TOL * scale:
            return None
        disc = 0.0
    t = (-b - math.sqrt(disc)) / (2.0 * a)
    if t < 0.0:
        if t < -TIME_TOL:
            return None  # closest approach was in the past
        t = 0.0
    if t > horizon:
        return None
    return t
