"""Exception types raised across the package."""


class PetalstarError(ValueError):
    """Base class for all petalstar errors."""


class ZeroConstantTerm(PetalstarError):
    """Division by a series whose constant term is (numerically) zero."""


class NonzeroInnerConstant(PetalstarError):
    """Composition with an inner series whose constant term is not zero."""


class NotInvertibleAtOrigin(PetalstarError):
    """Reversion of a series with c0 != 0 or vanishing linear term."""


class NotNormalized(PetalstarError):
    """Series does not satisfy the normalization c0 = 0, c1 = 1."""


class NonzeroConstant(PetalstarError):
    """Operation requires a series with zero constant term."""


class InsufficientOrder(PetalstarError):
    """Series truncation order too low for the requested coefficients."""


class IndexOutOfRange(PetalstarError):
    """Coefficient sequence too short for the requested determinant."""


class DomainViolation(PetalstarError):
    """Parameter outside its documented domain."""


class EndpointSingularity(PetalstarError):
    """Evaluation at a parameter endpoint where the expression has a pole."""


class SingularSample(PetalstarError):
    """A sampling-based check hit a point where the function vanishes."""
