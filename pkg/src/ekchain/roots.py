"""Independent numeric root finder used to validate the annulus bounds.

Simultaneous (Aberth-Ehrlich style) iteration: all roots are refined at
once, each Newton correction coupled to the others through a pairwise
repulsion term.  Deterministic by construction: the starting points are
fixed, equally spaced on the circle whose radius is the geometric mean of
the annulus bounds, rotated by a fixed irrational phase so conjugate
symmetry cannot lock the iteration.
"""

from __future__ import annotations

import json
import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DegreeZeroError
from .polynomials import Annulus, CoefficientSequence, as_coefficients, ek_annulus

CORRECTION_TOL = 1e-14
MAX_ITERATIONS = 200
POLISH_STEPS = 3
RESIDUAL_TOL = 1e-10

# Fixed irrational rotation of the starting circle (golden-ratio conjugate,
# in radians); any irrational works, this one is written out so two builds
# of the package agree bit for bit.
PHASE_OFFSET = 0.6180339887498949


@dataclass
class RootSet:
    """All roots of one polynomial, with scaled residuals |P(z)| / scale.

    The residual scale at each root is sum a_k |z|^k, which for positive
    coefficients is a cancellation-free measure of the evaluation magnitude,
    so `converged` means every root has backward error below RESIDUAL_TOL.
    `relaxed` records whether the iteration needed the loosened correction
    threshold that kicks in after 150 sweeps (near-multiple clusters).
    """

    roots: list[complex]
    residuals: list[float]
    converged: bool
    iterations: int
    relaxed: bool = field(default=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "roots": [{"re": z.real, "im": z.imag} for z in self.roots],
            "residuals": self.residuals,
            "converged": self.converged,
            "iterations": self.iterations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _initial_guesses(c: CoefficientSequence) -> np.ndarray:
    try:
        a = ek_annulus(c)
        radius = math.sqrt(a.inner * a.outer)
    except DegreeZeroError:  # pragma: no cover - find_roots rejects degree 0 first
        radius = 1.0 + max(abs(x) / c[c.degree] for x in c)
    d = c.degree
    j = np.arange(d)
    return radius * np.exp(1j * (2.0 * np.pi * j / d + PHASE_OFFSET))


def find_roots(c: CoefficientSequence | Sequence[float]) -> RootSet:
    """All complex roots of sum a_k z^k, polished and deterministically ordered.

    Iterates until the largest relative correction drops below
    CORRECTION_TOL or MAX_ITERATIONS sweeps, then applies POLISH_STEPS
    independent Newton steps per root.  Never raises on poor convergence;
    the best-effort roots come back with converged=False.
    """
    c = as_coefficients(c)
    if c.degree < 1:
        raise DegreeZeroError("root finding needs degree >= 1")

    a = c.as_array()
    z0 = _initial_guesses(c)
    z, iterations, relaxed = kernels.aberth_solve(a, z0, CORRECTION_TOL, MAX_ITERATIONS)
    z = kernels.newton_polish(a, z, POLISH_STEPS)

    order = np.lexsort((z.imag, z.real))
    z = z[order]

    values = np.abs(kernels.horner_many(a, z))
    scales = kernels.horner_many(a, np.abs(z).astype(np.complex128)).real
    residuals = values / scales
    converged = bool((residuals < RESIDUAL_TOL).all())

    return RootSet(
        roots=[complex(v) for v in z],
        residuals=[float(v) for v in residuals],
        converged=converged,
        iterations=int(iterations),
        relaxed=bool(relaxed),
    )


@dataclass
class MembershipViolation:
    index: int
    modulus: float
    margin: float

    def to_dict(self) -> dict:
        return {"index": self.index, "modulus": self.modulus, "margin": self.margin}


@dataclass
class MembershipReport:
    """Outcome of checking every root modulus against the annulus bounds."""

    passed: bool
    moduli: list[float]
    lower: float
    upper: float
    violations: list[MembershipViolation]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "moduli": self.moduli,
            "lower": self.lower,
            "upper": self.upper,
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def check_annulus_membership(
    roots: RootSet, a: Annulus, tol: float
) -> MembershipReport:
    """Closed-annulus membership with tolerance.

    Every root must satisfy inner - tol*outer <= |z| <= outer*(1 + tol); a
    degenerate annulus tightens this to | |z| - inner | <= tol*inner.
    Violations are report content, not exceptions: one would indicate a bug
    in either the bounds or the root finder, which is for tests to surface.
    """
    if a.degenerate:
        lower = a.inner - tol * a.inner
        upper = a.inner + tol * a.inner
    else:
        lower = a.inner - tol * a.outer
        upper = a.outer * (1.0 + tol)

    moduli = [abs(z) for z in roots.roots]
    violations = []
    for i, m in enumerate(moduli):
        margin = max(lower - m, m - upper)
        if margin > 0.0:
            violations.append(MembershipViolation(index=i, modulus=m, margin=margin))
    return MembershipReport(
        passed=not violations,
        moduli=moduli,
        lower=lower,
        upper=upper,
        violations=violations,
    )
