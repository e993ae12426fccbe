"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DirectRefError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DirectRefError, ValueError):
    """Malformed concrete syntax.

    ``position`` is a character offset for text input and a token index for
    symbol-sequence input; ``expected`` names the tokens that would have been
    accepted there.
    """

    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        self.position = position
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at position {position}{detail}")


class OpenTermError(DirectRefError, ValueError):
    """A substitution was asked to insert a term that contains variables."""


class NumeralTooLarge(DirectRefError):
    """A numeral would have to be expanded beyond the configured bound."""


class ConstantNotInL(DirectRefError):
    """An added constant appeared where only the base language is allowed."""


class NotACode(DirectRefError):
    """The number is not the code of any formula under the chosen scheme."""


class NotAClassSign(DirectRefError):
    """The formula has a free variable other than x1 or mentions a constant."""


class BadProperty(DirectRefError):
    """A fixed-point property has free variables besides x1 or constants besides a1."""


class ResourceLimit(DirectRefError):
    """A configured work budget was exhausted."""


class UnboundConstant(DirectRefError):
    """Proof translation met a constant with no numeral binding."""


class ProofConstructionFailure(DirectRefError):
    """An internally built proof did not check. Always a defect."""


class ProofFormatError(DirectRefError, ValueError):
    """A serialized proof could not be read."""
