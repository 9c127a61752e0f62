"""Positive-coefficient polynomials and their root-localization annulus.

The central fact: every zero of a_n z^n + ... + a_1 z + a_0 with all a_k > 0
has modulus between the smallest and the largest consecutive-coefficient
ratio a_{k-1}/a_k.  This module computes that annulus, classifies coefficient
monotonicity (the hypothesis the circle chains are built on), and provides
the closed-form geometric sum used as an oracle for equal-coefficient sums.
"""

from __future__ import annotations

import cmath
import enum
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    AngleAtSingularityError,
    DegreeZeroError,
    NonPositiveCoefficientError,
)
from .geometry import TAU_ANGLE


@dataclass(frozen=True)
class CoefficientSequence:
    """Strictly positive coefficients a_0..a_n, constant term first.

    Doubles as the p_k of the external chain and the q_k of the internal one;
    the role is contextual.  Construction rejects zero, negative and
    non-finite entries outright: a zero coefficient changes the hypotheses of
    every statement in this package.
    """

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]) -> None:
        values = tuple(float(c) for c in coeffs)
        if len(values) == 0:
            raise NonPositiveCoefficientError("coefficient sequence must be non-empty")
        for i, c in enumerate(values):
            if not (math.isfinite(c) and c > 0.0):
                raise NonPositiveCoefficientError(
                    f"coefficient at index {i} must be finite and > 0, got {c}"
                )
        object.__setattr__(self, "coeffs", values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def reversed(self) -> "CoefficientSequence":
        return CoefficientSequence(self.coeffs[::-1])

    def as_array(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.float64)

    def total(self) -> float:
        return float(sum(self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> float:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)


def as_coefficients(c: "CoefficientSequence | Sequence[float]") -> CoefficientSequence:
    if isinstance(c, CoefficientSequence):
        return c
    return CoefficientSequence(c)


@dataclass(frozen=True)
class Annulus:
    """Open modulus bounds min/max of a_{k-1}/a_k; degenerate when equal."""

    inner: float
    outer: float
    degenerate: bool

    def to_dict(self) -> dict:
        return {"inner": self.inner, "outer": self.outer, "degenerate": self.degenerate}


class Monotonicity(enum.Enum):
    STRICTLY_INCREASING = "strictly_increasing"
    NON_DECREASING = "non_decreasing"
    ALL_EQUAL = "all_equal"
    NON_INCREASING = "non_increasing"
    STRICTLY_DECREASING = "strictly_decreasing"
    MIXED = "mixed"


def ek_annulus(c: CoefficientSequence | Sequence[float]) -> Annulus:
    """Root-localization annulus from consecutive coefficient ratios.

    The ratios are computed once into a list and both extrema are taken from
    it, so the degenerate flag is an exact comparison of two identical
    floating-point reductions.
    """
    c = as_coefficients(c)
    if c.degree < 1:
        raise DegreeZeroError("annulus needs degree >= 1 (no ratios exist)")
    ratios = [c[k - 1] / c[k] for k in range(1, len(c))]
    inner = min(ratios)
    outer = max(ratios)
    return Annulus(inner=inner, outer=outer, degenerate=inner == outer)


def eval_poly(c: CoefficientSequence | Sequence[float], z: complex) -> complex:
    """Horner evaluation of sum a_k z^k; exact at z = 0."""
    c = as_coefficients(c)
    acc = complex(c[c.degree])
    for k in range(c.degree - 1, -1, -1):
        acc = acc * z + c[k]
    return acc


def classify_monotonicity(c: CoefficientSequence | Sequence[float]) -> Monotonicity:
    """Tag the sequence; precedence AllEqual > Strictly* > Non* > Mixed."""
    c = as_coefficients(c)
    pairs = list(zip(c.coeffs, c.coeffs[1:]))
    if all(a == b for a, b in pairs):
        return Monotonicity.ALL_EQUAL
    if all(a < b for a, b in pairs):
        return Monotonicity.STRICTLY_INCREASING
    if all(a > b for a, b in pairs):
        return Monotonicity.STRICTLY_DECREASING
    if all(a <= b for a, b in pairs):
        return Monotonicity.NON_DECREASING
    if all(a >= b for a, b in pairs):
        return Monotonicity.NON_INCREASING
    return Monotonicity.MIXED


def geometric_sum_closed_form(n: int, theta: float) -> complex:
    """(1 - z^{n+1}) / (1 - z) with z = e^{i*theta}.

    Oracle for the equal-coefficient trigonometric sum 1 + z + ... + z^n.
    Undefined at z = 1; callers probing near theta = 0 (mod 2*pi) get
    AngleAtSingularityError rather than a blow-up.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    z = cmath.exp(1j * theta)
    if abs(1.0 - z) < TAU_ANGLE:
        raise AngleAtSingularityError(f"theta={theta} puts e^(i*theta) at 1")
    return (1.0 - z ** (n + 1)) / (1.0 - z)
