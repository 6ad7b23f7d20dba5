"""Exception types shared across the library."""


class QuatRegularError(Exception):
    """Base class for all library errors."""


class DomainError(QuatRegularError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(QuatRegularError, ValueError):
    """A stated hypothesis of an operation is violated (normalisation, shape)."""


class ZeroFactorSignal(QuatRegularError, ArithmeticError):
    """The left factor vanishes at the point, so the star product is zero there.

    This is a signal, not a failure: callers evaluating a star product
    pointwise should catch it and use zero.
    """


class NumericalSearchError(QuatRegularError, RuntimeError):
    """A grid or root search failed to bracket a solution.

    The ``diagnostics`` attribute carries the sampled profile that failed,
    for inspection.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SeriesFormatError(QuatRegularError, ValueError):
    """A series file or payload does not match the expected JSON schema."""
