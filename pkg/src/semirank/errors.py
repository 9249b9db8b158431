"""Exception types raised by semirank."""


class SemirankError(Exception):
    """Base class for all library errors."""


class InstanceMismatchError(SemirankError, ValueError):
    pass


class NotAUnitError(SemirankError, ValueError):
    pass


class ResidualUndefinedError(SemirankError, ValueError):
    pass


class ZeroArgumentError(SemirankError, ValueError):
    pass


class DomainError(SemirankError, ValueError):
    """A payload lies outside the carrier of its semiring."""


class CapabilityError(SemirankError):
    """The semiring lacks a capability (total order, residuation) an algorithm needs."""


class ShapeError(SemirankError, ValueError):
    pass


class NoInverseError(SemirankError, ValueError):
    pass


class NotInvertibleError(SemirankError, ValueError):
    pass


class NotUVError(SemirankError, ValueError):
    """Raised when an operator has no (U,V) normal form.

    ``minor`` holds the offending ``(i, l, j, k)`` index quadruple when the
    failure is a cross-ratio violation.
    """

    def __init__(self, message, minor=None):
        super().__init__(message)
        self.minor = minor


class NoCorrespondenceError(SemirankError, ValueError):
    pass


class PreconditionError(SemirankError, ValueError):
    pass


class OutOfScopeError(SemirankError):
    pass


class UnsupportedDomainError(SemirankError):
    pass


class ResourceLimitError(SemirankError):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class SearchExhaustedError(SemirankError):
    pass


class ParseError(SemirankError, ValueError):
    """Malformed input text; carries 1-based ``line`` and ``column``."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
