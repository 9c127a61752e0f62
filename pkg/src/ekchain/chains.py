"""Shared chain construction and verification machinery.

Both chain flavors place the running partial sums R_k (or Q_k) of
sum p_m e^{im*theta} on circles of radius (p_k/2)csc(theta/2) whose centers
sit halfway along the step chord, offset onto the perpendicular bisector.
Non-decreasing coefficients make consecutive circles tangent from the
outside, non-increasing ones from the inside; everything else here is
identical between the two, so the builders and verifiers share this core.
"""

from __future__ import annotations

import enum
import json
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    DegenerateChainError,
    NotMonotoneError,
    RootOfUnityError,
    WrongOrientationError,
)
from .geometry import Angle, AngleClass, Circle, Point2, classify_angle
from .polynomials import (
    CoefficientSequence,
    Monotonicity,
    as_coefficients,
    classify_monotonicity,
)

DEFAULT_TOL = 1e-9

# Nonvanishing floor, relative to the coefficient sum: below this the
# floating-point cancellation is indistinguishable from a true zero.
NONVANISHING_REL = 1e-12


class Orientation(enum.Enum):
    EXTERNAL = "external"
    INTERNAL = "internal"


_ALLOWED_MONOTONICITY = {
    Orientation.EXTERNAL: (
        Monotonicity.ALL_EQUAL,
        Monotonicity.NON_DECREASING,
        Monotonicity.STRICTLY_INCREASING,
    ),
    Orientation.INTERNAL: (
        Monotonicity.ALL_EQUAL,
        Monotonicity.NON_INCREASING,
        Monotonicity.STRICTLY_DECREASING,
    ),
}


def as_angle(theta: "Angle | float") -> Angle:
    if isinstance(theta, Angle):
        return theta
    return Angle(float(theta))


def require_monotone(c: CoefficientSequence, orientation: Orientation) -> None:
    mono = classify_monotonicity(c)
    if mono not in _ALLOWED_MONOTONICITY[orientation]:
        direction = (
            "non-decreasing" if orientation is Orientation.EXTERNAL else "non-increasing"
        )
        raise NotMonotoneError(
            f"{orientation.value} chain needs {direction} coefficients, got {mono.value}"
        )


@dataclass
class ChainConstruction:
    """Partial sums, probes and interlacing circles of one trigonometric sum.

    `coincident[k-1]` is True iff circle k equals circle k-1 as a set, which
    happens exactly when p_{k-1} == p_k.  When theta is 0 or pi the chain
    collapses onto the X-axis: `degenerate_axis` is set and `circles` is
    empty, but sums and probes are still populated (with exact signs).
    """

    orientation: Orientation
    theta: Angle
    sums: list[Point2]
    probes: list[Point2]
    circles: list[Circle]
    coincident: list[bool]
    degenerate_axis: bool

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation.value,
            "theta": self.theta.canonical,
            "sums": [p.to_dict() for p in self.sums],
            "probes": [p.to_dict() for p in self.probes],
            "circles": [c.to_dict() for c in self.circles],
            "coincident": list(self.coincident),
            "degenerate_axis": self.degenerate_axis,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass
class VerificationReport:
    """Per-identity residuals of one chain, with a pass/fail verdict.

    Residual families (k runs 1..n):
      tangency      | dist(C_k, C_{k-1}) - |r_k - r_{k-1}| |
      membership    R_{k-1} on circle k, then on circle k-1 (two entries per k)
      probe         S_k on circle k-1
      collinearity  |det(R_{k-1}, C_{k-1}, C_k)|
    `passed` requires every circle residual < tol * max radius, every
    determinant < tol * (max radius)^2, and |R_n| above the nonvanishing
    floor.  Coincident pairs contribute exact-zero tangency/collinearity
    entries by convention.
    """

    tangency_residuals: list[float]
    membership_residuals: list[float]
    probe_residuals: list[float]
    collinearity_residuals: list[float]
    nonvanishing_magnitude: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "tangency_residuals": self.tangency_residuals,
            "membership_residuals": self.membership_residuals,
            "probe_residuals": self.probe_residuals,
            "collinearity_residuals": self.collinearity_residuals,
            "nonvanishing_magnitude": self.nonvanishing_magnitude,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def partial_sum_arrays(p: np.ndarray, theta: float):
    """Running sums of p_m e^{im*theta} for any theta (single pass)."""
    k = np.arange(p.shape[0], dtype=np.float64)
    xs = np.cumsum(p * np.cos(k * theta))
    ys = np.cumsum(p * np.sin(k * theta))
    return xs, ys


def _axis_sign(cls: AngleClass, k: int) -> float:
    if cls is AngleClass.ZERO:
        return 1.0
    return -1.0 if k % 2 else 1.0


def axis_chain_points(c: CoefficientSequence, cls: AngleClass):
    """Sums and probes for theta in {0, pi}, with exact +-1 signs.

    At theta = pi the points alternate between the positive and negative
    parts of the X-axis; computing cos(k*pi) through libm would leave
    ~1e-16-sized imaginary dust, so the signs are applied exactly.
    """
    sums: list[Point2] = []
    probes: list[Point2] = []
    x = 0.0
    for k in range(len(c)):
        if k >= 1:
            probes.append(Point2(x + c[k - 1] * _axis_sign(cls, k), 0.0))
        x += c[k] * _axis_sign(cls, k)
        sums.append(Point2(x, 0.0))
    return sums, probes


def coincident_flags(c: CoefficientSequence) -> list[bool]:
    # exact equality on purpose: a tolerance would silently change the
    # chain's combinatorics for nearly-equal coefficients
    return [c[k - 1] == c[k] for k in range(1, len(c))]


def build(
    coeffs: CoefficientSequence | Sequence[float],
    theta: "Angle | float",
    orientation: Orientation,
) -> ChainConstruction:
    """Construct the full chain for one coefficient sequence and angle.

    Angles in the lower half-plane are handled by the same closed forms (the
    construction mirrors through the X-axis); theta = 0 or pi yields a
    degenerate axis chain with no circles.
    """
    c = as_coefficients(coeffs)
    theta = as_angle(theta)
    require_monotone(c, orientation)
    flags = coincident_flags(c)

    cls = classify_angle(theta)
    if cls in (AngleClass.ZERO, AngleClass.PI):
        sums, probes = axis_chain_points(c, cls)
        return ChainConstruction(
            orientation=orientation,
            theta=theta,
            sums=sums,
            probes=probes,
            circles=[],
            coincident=flags,
            degenerate_axis=True,
        )

    xs, ys, sx, sy, cx, cy, r = kernels.chain_arrays(c.as_array(), theta.canonical)
    sums = [Point2(float(x), float(y)) for x, y in zip(xs, ys)]
    probes = [Point2(float(x), float(y)) for x, y in zip(sx, sy)]
    circles = [
        Circle(Point2(float(x), float(y)), float(rad)) for x, y, rad in zip(cx, cy, r)
    ]
    return ChainConstruction(
        orientation=orientation,
        theta=theta,
        sums=sums,
        probes=probes,
        circles=circles,
        coincident=flags,
        degenerate_axis=False,
    )


def circle_at(
    coeffs: CoefficientSequence | Sequence[float], theta: "Angle | float", k: int
) -> Circle:
    """Circle k of the chain, from the closed-form center and radius."""
    from .errors import DegenerateAngleError

    c = as_coefficients(coeffs)
    theta = as_angle(theta)
    if not 0 <= k <= c.degree:
        raise ValueError(f"k must be in [0, {c.degree}], got {k}")
    if classify_angle(theta) in (AngleClass.ZERO, AngleClass.PI):
        raise DegenerateAngleError(
            f"theta={theta.theta} is a multiple of pi; the chain has no circles there"
        )
    _, _, _, _, cx, cy, r = kernels.chain_arrays(c.as_array(), theta.canonical)
    return Circle(Point2(float(cx[k]), float(cy[k])), float(r[k]))


def _chain_to_arrays(chain: ChainConstruction):
    xs = np.array([p.x for p in chain.sums])
    ys = np.array([p.y for p in chain.sums])
    sx = np.array([p.x for p in chain.probes])
    sy = np.array([p.y for p in chain.probes])
    cx = np.array([c.center.x for c in chain.circles])
    cy = np.array([c.center.y for c in chain.circles])
    r = np.array([c.radius for c in chain.circles])
    flags = np.array(chain.coincident, dtype=bool)
    return xs, ys, sx, sy, cx, cy, r, flags


def verify(
    chain: ChainConstruction, tol: float, orientation: Orientation
) -> VerificationReport:
    """Check every interlacing identity of a non-degenerate chain."""
    if chain.orientation is not orientation:
        raise WrongOrientationError(
            f"chain has orientation {chain.orientation.value}, "
            f"verifier expects {orientation.value}"
        )
    if chain.degenerate_axis:
        raise DegenerateChainError(
            "axis-degenerate chain has no circles; check the sign rules via "
            "the nonvanishing witness instead"
        )

    xs, ys, sx, sy, cx, cy, r, flags = _chain_to_arrays(chain)
    tangency, membership, probe, collinearity = kernels.chain_residuals(
        xs, ys, sx, sy, cx, cy, r, flags
    )

    scale = float(r.max())
    half = 0.5 * chain.theta.canonical
    coeff_total = float(2.0 * math.sin(half) * r.sum())
    nonvanishing = math.hypot(xs[-1], ys[-1])

    circle_ok = (
        bool((tangency < tol * scale).all())
        and bool((membership < tol * scale).all())
        and bool((probe < tol * scale).all())
    )
    det_ok = bool((collinearity < tol * scale * scale).all())
    nonvan_ok = nonvanishing > NONVANISHING_REL * coeff_total

    nested_ok = True
    if orientation is Orientation.INTERNAL:
        # each circle must sit inside its predecessor, touching at one point
        dist_c = np.hypot(cx[1:] - cx[:-1], cy[1:] - cy[:-1])
        nested_ok = bool((dist_c + r[1:] <= r[:-1] + tol * scale).all()) and bool(
            (r[1:] <= r[:-1]).all()
        )

    return VerificationReport(
        tangency_residuals=tangency.tolist(),
        membership_residuals=membership.tolist(),
        probe_residuals=probe.tolist(),
        collinearity_residuals=collinearity.tolist(),
        nonvanishing_magnitude=float(nonvanishing),
        passed=circle_ok and det_ok and nonvan_ok and nested_ok,
    )


def witness_magnitude(
    coeffs: CoefficientSequence | Sequence[float],
    theta: "Angle | float",
    orientation: Orientation,
) -> float:
    """|R_n| (or |Q_n|) with the monotonicity and root-of-unity guards.

    Raises RootOfUnityError when the sum cancels below the nonvanishing
    floor, which under the monotonicity precondition happens only through
    root-of-unity cancellation (equal coefficients at a nontrivial
    (n+1)-st root of unity, or equal-block cancellation at theta = pi and
    similar grid angles).
    """
    c = as_coefficients(coeffs)
    theta = as_angle(theta)
    require_monotone(c, orientation)

    cls = classify_angle(theta)
    if cls in (AngleClass.ZERO, AngleClass.PI):
        sums, _ = axis_chain_points(c, cls)
        magnitude = abs(sums[-1].x)
    else:
        xs, ys = partial_sum_arrays(c.as_array(), theta.canonical)
        magnitude = math.hypot(float(xs[-1]), float(ys[-1]))

    if magnitude <= NONVANISHING_REL * c.total():
        raise RootOfUnityError(
            f"sum cancels at theta={theta.canonical}: e^(i*theta) hits a root of "
            f"unity for this coefficient pattern (|sum|={magnitude:.3e})"
        )
    return magnitude


def theta_grid(count: int = 720) -> np.ndarray:
    """Midpoint grid of `count` angles in (0, 2*pi), avoiding 0 and pi.

    The midpoint offset keeps every grid angle at least pi/count away from
    the degenerate angles 0, pi and 2*pi.
    """
    return (np.arange(count) + 0.5) * (2.0 * math.pi / count)


@dataclass
class SweepSummary:
    """Worst relative residuals of a chain across a grid of angles."""

    grid_points: int
    worst_tangency: float
    worst_membership: float
    worst_probe: float
    worst_collinearity: float
    min_nonvanishing: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "grid_points": self.grid_points,
            "worst_tangency": self.worst_tangency,
            "worst_membership": self.worst_membership,
            "worst_probe": self.worst_probe,
            "worst_collinearity": self.worst_collinearity,
            "min_nonvanishing": self.min_nonvanishing,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def residual_sweep(
    coeffs: CoefficientSequence | Sequence[float],
    orientation: Orientation,
    thetas: np.ndarray | None = None,
    tol: float = DEFAULT_TOL,
) -> SweepSummary:
    """Run the chain identities across a theta grid and keep the worst case.

    Circle residuals are normalized by the largest radius at each angle, the
    collinearity determinant by its square, and the endpoint magnitude by the
    coefficient sum, so one number per family summarizes the whole sweep.
    """
    c = as_coefficients(coeffs)
    require_monotone(c, orientation)
    if thetas is None:
        thetas = theta_grid()
    p = c.as_array()
    flags = np.array(coincident_flags(c), dtype=bool)
    total = c.total()

    worst = np.zeros(4)
    min_nonvan = math.inf
    for theta in thetas:
        xs, ys, sx, sy, cx, cy, r = kernels.chain_arrays(p, float(theta))
        if c.degree >= 1:
            tangency, membership, probe, collinearity = kernels.chain_residuals(
                xs, ys, sx, sy, cx, cy, r, flags
            )
            scale = r.max()
            worst[0] = max(worst[0], tangency.max() / scale)
            worst[1] = max(worst[1], membership.max() / scale)
            worst[2] = max(worst[2], probe.max() / scale)
            worst[3] = max(worst[3], collinearity.max() / (scale * scale))
        min_nonvan = min(min_nonvan, math.hypot(xs[-1], ys[-1]) / total)

    passed = bool((worst < tol).all()) and min_nonvan > NONVANISHING_REL
    return SweepSummary(
        grid_points=len(thetas),
        worst_tangency=float(worst[0]),
        worst_membership=float(worst[1]),
        worst_probe=float(worst[2]),
        worst_collinearity=float(worst[3]),
        min_nonvanishing=float(min_nonvan),
        passed=passed,
    )
