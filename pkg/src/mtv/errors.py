"""Exception hierarchy shared across the package."""


class MtvError(Exception):
    """Base class for all package-specific errors."""


class HomogeneityError(MtvError, ValueError):
    """Addition of pi-monomial values of different pi-weight."""


class DomainError(MtvError, ValueError):
    """Parameters outside an operation's domain (e.g. k > n)."""


class UnsupportedExactError(DomainError):
    """No exact closed form exists for the requested value."""


class DivergenceError(DomainError):
    """The requested nested series diverges (last exponent is 1)."""


class InsufficientTermsError(DomainError):
    """Fewer summation terms than the depth of the nested sum."""


class ConsistencyError(MtvError, RuntimeError):
    """A root-of-unity computation that must reduce to a rational did not.

    This signals a transcription bug in an evaluation formula, not bad
    user input: the affected formulas are rational-valued by construction.
    """
