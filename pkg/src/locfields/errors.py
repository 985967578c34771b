"""Exception hierarchy shared by the whole package.

The CLI maps these onto exit codes: ValidationError -> 2,
SearchExhaustedError -> 3, CapExceededError -> 4.
"""


class LocfieldsError(Exception):
    """Base class for all package errors."""


class ValidationError(LocfieldsError):
    """Malformed or mathematically inadmissible input."""


class SearchExhaustedError(LocfieldsError):
    """A bounded search ran out of candidates before succeeding."""


class CapExceededError(LocfieldsError):
    """A configured resource cap would be exceeded."""


class PrecisionError(LocfieldsError):
    """Floating point could not be rounded to a certified integer answer."""


class DegeneratePeriodError(LocfieldsError):
    """Distinct cosets produced equal period values (non-primitive data)."""
