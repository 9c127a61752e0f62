"""Exception types shared across the package."""


class EkchainError(ValueError):
    """Base class for all domain errors raised by this package."""


class NonPositiveCoefficientError(EkchainError):
    """A coefficient is zero, negative, or not finite."""


class DegreeZeroError(EkchainError):
    """Operation needs degree >= 1 (no consecutive-coefficient ratios exist)."""


class AngleAtSingularityError(EkchainError):
    """Closed-form geometric sum evaluated where e^{i*theta} == 1."""


class CollinearPointsError(EkchainError):
    """Circumcircle requested for three (nearly) collinear points."""


class DegenerateAngleError(EkchainError):
    """Circle construction requested for an angle that is a multiple of pi."""


class NotMonotoneError(EkchainError):
    """Coefficient sequence violates the monotonicity hypothesis of the chain."""


class RootOfUnityError(EkchainError):
    """The trigonometric sum cancels exactly (e^{i*theta} at a root of unity)."""


class DegenerateChainError(EkchainError):
    """Chain collapsed onto the real axis; circle identities do not apply."""


class WrongOrientationError(EkchainError):
    """Chain passed to the verifier for the opposite orientation."""


class EmptyChainError(EkchainError):
    """Figure rendering requires at least one partial-sum point."""
