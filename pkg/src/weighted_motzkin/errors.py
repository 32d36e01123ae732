"""Exception types shared across the package."""


class MotzkinError(Exception):
    """Base class for all package errors."""


class EnumerationLimitError(MotzkinError):
    """An exhaustive enumeration would emit more objects than the configured cap."""

    def __init__(self, needed: int, cap: int):
        super().__init__(f"enumeration needs {needed} objects, cap is {cap}")
        self.needed = needed
        self.cap = cap


class InvalidObjectError(MotzkinError, ValueError):
    """A path, composition or marked path violates its class invariants."""


class ParameterError(MotzkinError, ValueError):
    """A numeric parameter lies outside its admissible range."""


class NonIntegralEntryError(MotzkinError, ArithmeticError):
    """A matrix extracted from exact series has a non-integer entry."""
