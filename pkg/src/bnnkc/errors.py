"""Exception types shared across the package."""

from __future__ import annotations


class BnnError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(BnnError):
    """Operands live in hypercubes of different dimensions."""


class DimensionTooLarge(BnnError):
    """Dimension exceeds the configured cap for this kind of operation."""


class DegenerateDimension(BnnError):
    """A transformation would leave zero variables."""


class VertexCountTooLarge(BnnError):
    """Graph too large for brute-force subset enumeration."""


class InvariantViolation(BnnError):
    """A structural invariant of a domain type does not hold."""


class TieError(BnnError):
    """A vector equidistant from both prototype sets: the pair defines no value there."""

    def __init__(self, witness):
        super().__init__(f"distance tie at {witness}")
        self.witness = witness


class ParseError(BnnError):
    """Input text rejected, with a 1-based position."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message
