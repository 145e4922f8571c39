"""Exception hierarchy shared by every module of the package."""


class PadicError(Exception):
    """Base class for all p-adic errors."""


class PrimalityError(PadicError, ValueError):
    pass


class PrecisionError(PadicError, ValueError):
    pass


class ContextMismatch(PadicError, TypeError):
    """Raised when numbers from two different contexts meet in one operation."""


class DivisionByZero(PadicError, ZeroDivisionError):
    pass


class NotASquare(PadicError, ValueError):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class OutsideDomain(PadicError, ValueError):
    """The argument lies outside the region where the function is defined."""


class NegativeValuation(PadicError, ValueError):
    pass


class PadicSyntaxError(PadicError, ValueError):
    """Text could not be parsed; ``position`` is a 0-based column."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class SeedNotRoot(PadicError, ValueError):
    pass


class SingularSeed(PadicError, ValueError):
    pass


class NoConvergence(PadicError, RuntimeError):
    pass
