"""Exception types raised across the package."""


class QuasiArrError(Exception):
    """Base class for all library errors."""


class InvalidModulusError(QuasiArrError, ValueError):
    pass


class ShapeError(QuasiArrError, ValueError):
    pass


class RangeError(QuasiArrError, ValueError):
    pass


class PreconditionError(QuasiArrError, ValueError):
    pass


class SizeLimitError(QuasiArrError):
    """A configured cap (subset count, enumeration budget) was exceeded."""

    def __init__(self, message, cap):
        super().__init__(message)
        self.cap = cap


class BudgetExceededError(SizeLimitError):
    """Brute-force enumeration would exceed the oracle budget."""
