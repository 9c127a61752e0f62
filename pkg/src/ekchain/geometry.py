"""Planar primitives shared by both chain constructions.

Points, circles and canonical angles, plus the three predicates the chain
verifiers are built on: Euclidean distance, the orientation/collinearity
determinant, and the circumcircle through three points.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import CollinearPointsError

TWO_PI = 2.0 * math.pi

# Relative tolerance for geometric degeneracy checks (scaled by the squared
# coordinate magnitude of the inputs).
TAU_GEOM = 1e-12

# Absolute tolerance for classifying an angle as 0 or pi.
TAU_ANGLE = 1e-12


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y}


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError(f"circle radius must be finite and positive, got {self.radius}")

    def to_dict(self) -> dict:
        return {"center": self.center.to_dict(), "radius": self.radius}


def _canonicalize(theta: float) -> float:
    c = theta % TWO_PI
    # float modulo may round up to the period itself for tiny negatives
    if c >= TWO_PI:
        c = 0.0
    return c


@dataclass(frozen=True)
class Angle:
    """An angle in radians together with its canonical value in [0, 2*pi)."""

    theta: float
    canonical: float = field(init=False)

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ValueError(f"angle must be finite, got {self.theta}")
        object.__setattr__(self, "canonical", _canonicalize(self.theta))


class AngleClass(enum.Enum):
    ZERO = "zero"
    PI = "pi"
    UPPER_HALF = "upper_half"
    LOWER_HALF = "lower_half"


def classify_angle(a: Angle) -> AngleClass:
    """Classify the canonical angle into {0, pi, (0,pi), (pi,2pi)}."""
    c = a.canonical
    if c <= TAU_ANGLE or c >= TWO_PI - TAU_ANGLE:
        return AngleClass.ZERO
    if abs(c - math.pi) <= TAU_ANGLE:
        return AngleClass.PI
    return AngleClass.UPPER_HALF if c < math.pi else AngleClass.LOWER_HALF


def distance(p: Point2, q: Point2) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def collinearity_det(a: Point2, b: Point2, c: Point2) -> float:
    """Determinant of the 3x3 matrix with rows (x, y, 1) for a, b, c.

    Zero iff the points are collinear; the sign gives the orientation of the
    triangle (positive for counter-clockwise).
    """
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)


def _coordinate_scale(*points: Point2) -> float:
    return max(max(abs(p.x), abs(p.y)) for p in points)


def circumcircle(a: Point2, b: Point2, c: Point2) -> Circle:
    """Circle through three non-collinear points.

    Solves the perpendicular-bisector system after translating `a` to the
    origin, which keeps the arithmetic well conditioned for far-off triples.

    Raises
    ------
    CollinearPointsError
        If the collinearity determinant is below TAU_GEOM relative to the
        squared coordinate scale of the inputs.
    """
    det = collinearity_det(a, b, c)
    scale = _coordinate_scale(a, b, c)
    if abs(det) <= TAU_GEOM * max(scale * scale, 1e-300):
        raise CollinearPointsError(f"points {a}, {b}, {c} are collinear")

    bx, by = b.x - a.x, b.y - a.y
    cx, cy = c.x - a.x, c.y - a.y
    d = 2.0 * (bx * cy - by * cx)
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Circle(Point2(a.x + ux, a.y + uy), math.hypot(ux, uy))
