"""Exception types shared across the package."""

from __future__ import annotations


class AutomatonError(ValueError):
    """Base class for malformed or unusable automata."""


class MalformedTableError(AutomatonError):
    """A transition or output table is missing a cell or holds a bad token."""

    def __init__(self, message: str, cell: tuple[str, str] | None = None):
        super().__init__(message)
        self.cell = cell


class ParseError(AutomatonError):
    """Raised for syntax errors in text formats; carries the 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IrreversibleError(AutomatonError):
    """The combined (state, symbol) map is not injective."""

    def __init__(self, witness):
        (s, i), (t, j) = witness
        super().__init__(
            f"not reversible: ({s},{i}) and ({t},{j}) have the same image"
        )
        self.witness = witness


class DomainError(ValueError):
    """A token, index or size is outside the object's domain."""


class NotALatticeError(ValueError):
    """Some pair of propositions has no unique least upper / greatest lower bound."""

    def __init__(self, kind: str, pair):
        a, b = pair
        super().__init__(f"not a lattice: no unique {kind} for {a} and {b}")
        self.kind = kind
        self.pair = pair


class CopyRetainedError(RuntimeError):
    """Undo was requested while classical copies of the outcomes still exist."""
