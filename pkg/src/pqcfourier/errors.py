"""Exception and warning types raised across the package."""


class PQCError(Exception):
    """Base class for all package errors."""


class InputError(PQCError, ValueError):
    """Malformed input: bad shapes, bad indices, unparsable circuit files."""


class NumericalError(PQCError, ArithmeticError):
    """A numerical procedure could not deliver a trustworthy answer."""


class NotHermitian(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class DuplicatePoints(InputError):
    pass


class NoConvergence(NumericalError):
    pass


class Singular(NumericalError):
    pass


class ImaginaryResidual(NumericalError):
    """An expectation value came out complex; usually a non-Hermitian input."""


class NotCommensurable(NumericalError):
    """No common scale turns the spectrum into integers within tolerance."""


class PersistentIllConditioning(NumericalError):
    pass


class IllConditioned(UserWarning):
    """Issued when a linear solve runs with a condition estimate >= 1e8."""


class AliasingFallback(UserWarning):
    """Equidistant sampling would alias two frequencies; a wider grid was used."""
