"""Internally interlacing circle chain for non-increasing coefficients.

For q_0 >= q_1 >= ... >= q_n > 0 the partial sums Q_k lie on circles
nested inward: each circle sits inside its predecessor, touching it at
Q_{k-1}.  Reversing the coefficients and negating the angle turns Q_n into
the endpoint of an external chain up to a unit phase, which links the two
constructions; the builder here still evaluates its own closed forms rather
than reversing, so that link stays a genuine cross-check.
"""

from __future__ import annotations

import cmath
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


def partial_sums_q(
    q: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> list[Point2]:
    """Points Q_0..Q_n with Q_k = sum_{m<=k} q_m e^{im*theta}."""
    c = as_coefficients(q)
    theta = as_angle(theta)
    xs, ys = chains.partial_sum_arrays(c.as_array(), theta.canonical)
    return [Point2(float(x), float(y)) for x, y in zip(xs, ys)]


def tomic_circle(
    q: CoefficientSequence | Sequence[float], theta: "Angle | float", k: int
) -> Circle:
    """Circle k of the internal chain: radius (q_k/2)csc(theta/2), center
    from the same closed form as the external chain."""
    return chains.circle_at(q, theta, k)


def build_chain_internal(
    q: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> ChainConstruction:
    """Construct the internal chain; requires non-increasing coefficients."""
    return chains.build(q, theta, Orientation.INTERNAL)


def verify_chain_internal(
    chain: ChainConstruction, tol: float = chains.DEFAULT_TOL
) -> VerificationReport:
    """Check the internal interlacing identities, including the nesting
    direction (each circle inside its predecessor)."""
    return chains.verify(chain, tol, Orientation.INTERNAL)


def reversal_transform(
    q: CoefficientSequence | Sequence[float], theta: "Angle | float"
) -> tuple[CoefficientSequence, Angle, complex]:
    """Map the non-increasing sum to its non-decreasing mirror.

    Returns (reverse(q), canonicalized -theta, phase e^{-in*theta}).  The
    external-chain endpoint of the reversed sequence at -theta equals
    phase * Q_n, so both endpoints share one magnitude.
    """
    c = as_coefficients(q)
    theta = as_angle(theta)
    phase = cmath.exp(-1j * c.degree * theta.canonical)
    return c.reversed(), Angle(-theta.canonical), phase
