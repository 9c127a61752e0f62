"""Externally interlacing circle chain for non-decreasing coefficients.

For p_0 <= p_1 <= ... <= p_n the partial sums R_k of sum p_m e^{im*theta}
lie on circles C_0 ... C_n, each containing its predecessor and touching it
at exactly one point (R_{k-1}).  The origin sits on C_0 and strictly inside
every later circle, which is the geometric certificate that R_n != 0.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

from . import chains
from .chains import (
    ChainConstruction,
    Orientation,
    VerificationReport,
    as_angle,
)
from .geometry import Angle, Circle, Point2
from .polynomials import CoefficientSequence, as_coefficients


def partial_sums(
    p: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> list[Point2]:
    """Points R_0..R_n with R_k = sum_{m<=k} p_m e^{im*theta}."""
    c = as_coefficients(p)
    theta = as_angle(theta)
    xs, ys = chains.partial_sum_arrays(c.as_array(), theta.canonical)
    return [Point2(float(x), float(y)) for x, y in zip(xs, ys)]


def probe_points(
    p: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> list[Point2]:
    """Points S_1..S_n with S_k = R_{k-1} + p_{k-1} e^{ik*theta}.

    S_k lies on circle k-1 and anchors the construction of circle k; when
    p_{k-1} == p_k it coincides with R_k.
    """
    c = as_coefficients(p)
    theta = as_angle(theta)
    xs, ys = chains.partial_sum_arrays(c.as_array(), theta.canonical)
    out = []
    t = theta.canonical
    for k in range(1, len(c)):
        out.append(
            Point2(
                float(xs[k - 1]) + c[k - 1] * math.cos(k * t),
                float(ys[k - 1]) + c[k - 1] * math.sin(k * t),
            )
        )
    return out


def kakeya_circle(
    p: CoefficientSequence | Sequence[float], theta: "Angle | float", k: int
) -> Circle:
    """Circle k of the external chain: radius (p_k/2)csc(theta/2), center
    reached from R_{k-1} by half a step rotated onto the chord bisector."""
    return chains.circle_at(p, theta, k)


def build_chain(
    p: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> ChainConstruction:
    """Construct the external chain; requires non-decreasing coefficients."""
    return chains.build(p, theta, Orientation.EXTERNAL)


def verify_chain(chain: ChainConstruction, tol: float = chains.DEFAULT_TOL) -> VerificationReport:
    """Check tangency, membership, probe and collinearity identities."""
    return chains.verify(chain, tol, Orientation.EXTERNAL)


def nonvanishing_witness(
    p: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> float:
    """|R_n|, guaranteed positive for non-decreasing coefficients away from
    root-of-unity cancellation (RootOfUnityError otherwise)."""
    return chains.witness_magnitude(p, theta, Orientation.EXTERNAL)
