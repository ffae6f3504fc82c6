"""Domain exceptions for quasieq.

These are raised by the parser, the finite-algebra layer and the application
services to signal expected failure conditions.  The CLI catches them and maps
them to exit status 2 with a structured error body.  Unexpected exceptions
(programming errors, etc.) propagate to the catch-all handler in
``quasieq.cli.main``.
"""


class QuasiEqError(Exception):
    """Base class for all quasieq domain errors."""


class EquationSyntaxError(QuasiEqError):
    """Raised when equation text does not match the concrete syntax."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at offset {position}")
        self.position = position


class ArityError(EquationSyntaxError):
    """Raised when an operation symbol is applied to a number of arguments other than two."""


class NotFunctionalEquationError(QuasiEqError):
    """Raised when an equation contains no operation symbol."""


class PreconditionError(QuasiEqError):
    """Raised when a partial classifier receives an equation outside its domain."""


class VariableNotFoundError(QuasiEqError):
    """Raised when a height or branch is requested for a variable absent from the term."""


class UnknownEquationError(QuasiEqError):
    """Raised when an equation id is not in the catalog."""


class UnsupportedEquationError(QuasiEqError):
    """Raised when no solution theory (or duality pairing) is known for an equation."""


class KrsticGraphError(QuasiEqError):
    """Raised when an equation does not yield a connected cubic multigraph."""


class InvalidTableError(QuasiEqError):
    """Raised when a Cayley table, Latin square, group or loop fails validation."""


class OrderBoundError(QuasiEqError):
    """Raised when a search is requested above its configured order bound."""


class AbelianRequirementError(QuasiEqError):
    """Raised when an equation's solution theory demands an Abelian carrier group."""


class UnassignedSymbolError(QuasiEqError):
    """Raised when an interpretation misses an operation symbol of the equation."""


class OrderMismatchError(QuasiEqError):
    """Raised when tables of different orders are combined."""


class SoundnessError(QuasiEqError):
    """Raised when a synthesized solution fails brute-force verification."""
