"""Exception hierarchy shared by all symcube modules."""


class SymcubeError(Exception):
    """Base class for every error raised by this package."""


class InvalidWeightError(SymcubeError, ValueError):
    pass


class UnsupportedWeightError(SymcubeError, ValueError):
    pass


class InsufficientPrecisionError(SymcubeError):
    """Raised when a computation needs more q-expansion or Dirichlet terms than are known."""

    def __init__(self, message, needed=None, available=None):
        super().__init__(message)
        self.needed = needed
        self.available = available


class NotPrimeError(SymcubeError, ValueError):
    pass


class OrdinarityError(SymcubeError, ValueError):
    pass


class PoleError(SymcubeError, ValueError):
    def __init__(self, location):
        super().__init__(f"gamma factor has a pole at s = {location}")
        self.location = location


class RootNumberUnknownError(SymcubeError):
    def __init__(self):
        super().__init__("root number not set: call root_number(L, digits) first")


class RootNumberError(SymcubeError):
    pass


class RationalizationError(SymcubeError):
    def __init__(self, message, quotient=None):
        super().__init__(message)
        self.quotient = quotient


class PAdicPrecisionError(SymcubeError, ArithmeticError):
    pass


class CriticalRangeError(SymcubeError, ValueError):
    pass


class CharacterError(SymcubeError, ValueError):
    pass


class PairingError(SymcubeError, ValueError):
    pass


class CacheFormatError(SymcubeError):
    pass


class ReportRefusedError(SymcubeError):
    """A report was requested on top of a certificate that does not pass its checks."""
