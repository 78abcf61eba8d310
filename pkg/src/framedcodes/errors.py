"""Exception types.  The CLI maps them onto exit codes."""


class FramedCodesError(Exception):
    pass


class LengthMismatchError(FramedCodesError, ValueError):
    pass


class CodeFormatError(FramedCodesError, ValueError):
    pass


class PreconditionError(FramedCodesError, ValueError):
    pass


class BudgetExceededError(FramedCodesError, RuntimeError):
    """An enumeration or search would exceed its configured budget."""

    def __init__(self, message, explored: int | None = None):
        super().__init__(message)
        self.explored = explored


class UnsupportedFusionError(FramedCodesError, NotImplementedError):
    pass


class InternalConsistencyError(FramedCodesError, AssertionError):
    """Two independent computations that must agree did not."""
