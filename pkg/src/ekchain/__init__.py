"""Root-localization annuli and interlacing-circle certificates.

Computes the min/max consecutive-coefficient-ratio annulus that confines all
zeros of a positive-coefficient polynomial, and constructs, verifies and
renders the circle chains that certify non-vanishing of monotone
trigonometric sums (externally tangent circles for non-decreasing
coefficients, internally nested ones for non-increasing coefficients).
"""

from .chains import (
    ChainConstruction,
    Orientation,
    SweepSummary,
    VerificationReport,
    residual_sweep,
    theta_grid,
)
from .errors import (
    AngleAtSingularityError,
    CollinearPointsError,
    DegenerateAngleError,
    DegenerateChainError,
    DegreeZeroError,
    EkchainError,
    EmptyChainError,
    NonPositiveCoefficientError,
    NotMonotoneError,
    RootOfUnityError,
    WrongOrientationError,
)
from .figures import FigureStyle, render_annulus_svg, render_chain_svg
from .geometry import (
    Angle,
    AngleClass,
    Circle,
    Point2,
    circumcircle,
    classify_angle,
    collinearity_det,
    distance,
)
from .kakeya import (
    build_chain,
    kakeya_circle,
    nonvanishing_witness,
    partial_sums,
    probe_points,
    verify_chain,
)
from .polynomials import (
    Annulus,
    CoefficientSequence,
    Monotonicity,
    classify_monotonicity,
    ek_annulus,
    eval_poly,
    geometric_sum_closed_form,
)
from .roots import (
    MembershipReport,
    RootSet,
    check_annulus_membership,
    find_roots,
)
from .tomic import (
    build_chain_internal,
    partial_sums_q,
    reversal_transform,
    tomic_circle,
    verify_chain_internal,
)

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "AngleClass",
    "AngleAtSingularityError",
    "Annulus",
    "ChainConstruction",
    "Circle",
    "CoefficientSequence",
    "CollinearPointsError",
    "DegenerateAngleError",
    "DegenerateChainError",
    "DegreeZeroError",
    "EkchainError",
    "EmptyChainError",
    "FigureStyle",
    "MembershipReport",
    "Monotonicity",
    "NonPositiveCoefficientError",
    "NotMonotoneError",
    "Orientation",
    "Point2",
    "RootOfUnityError",
    "RootSet",
    "SweepSummary",
    "VerificationReport",
    "WrongOrientationError",
    "build_chain",
    "build_chain_internal",
    "check_annulus_membership",
    "circumcircle",
    "classify_angle",
    "classify_monotonicity",
    "collinearity_det",
    "distance",
    "ek_annulus",
    "eval_poly",
    "find_roots",
    "geometric_sum_closed_form",
    "kakeya_circle",
    "nonvanishing_witness",
    "partial_sums",
    "partial_sums_q",
    "probe_points",
    "render_annulus_svg",
    "render_chain_svg",
    "residual_sweep",
    "reversal_transform",
    "theta_grid",
    "tomic_circle",
    "verify_chain",
    "verify_chain_internal",
]
