"""Exception hierarchy for the package."""

from __future__ import annotations


class LeibnizError(Exception):
    """Base class for every error raised by leibniz_aut."""


class DimensionMismatch(LeibnizError, ValueError):
    pass


class FieldMismatch(LeibnizError, ValueError):
    pass


class SingularMatrix(LeibnizError, ValueError):
    pass


class NotLeibniz(LeibnizError, ValueError):
    pass


class NotFiniteField(LeibnizError, ValueError):
    pass


class BudgetExceeded(LeibnizError, RuntimeError):
    pass


class NotInvariant(LeibnizError, ValueError):
    pass


class InadmissibleParams(LeibnizError, ValueError):
    pass


class NotInFamily(LeibnizError, ValueError):
    pass


class UnknownName(LeibnizError, KeyError):
    pass


class ParseError(LeibnizError, ValueError):
    """Malformed algebra file; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


class BadIndex(ParseError):
    pass


class DuplicateEntry(ParseError):
    pass


class BadField(ParseError):
    """Unparseable field spec, or a modulus that is not a supported prime."""
