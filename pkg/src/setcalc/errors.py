"""Exception types shared across the package."""


class SetCalcError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SetCalcError):
    """Malformed statement text. `position` is a 0-based character offset."""

    def __init__(self, position, expected):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at position {position}: expected {expected}")


class ArityError(SetCalcError):
    """A binary set operator joined operands of different tuple arity."""

    def __init__(self, message, node=None):
        self.node = node
        super().__init__(message)


class LimitError(SetCalcError):
    """A size guard (variable count, universe size, tuple count) was exceeded."""


class CoefficientOverflowError(SetCalcError, OverflowError):
    """A polynomial coefficient left the signed 64-bit range."""


class MissingVarError(SetCalcError):
    """A pattern does not assign one of the polynomial's variables."""


class IncompleteTableError(SetCalcError):
    """A value table does not cover every 0/1 assignment."""


class NotACounterexampleError(SetCalcError):
    """The given pattern does not refute the statement."""


class UnboundAtomError(SetCalcError):
    """An atom of the expression has no concrete set assigned to it."""


class UniverseMismatchError(SetCalcError):
    """Concrete sets from different universes were combined."""


class CodomainUnspecifiedError(SetCalcError):
    """A surjectivity scan was requested without a codomain rule."""
