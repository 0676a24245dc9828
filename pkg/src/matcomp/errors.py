"""Exception hierarchy for matcomp."""


class MatcompError(Exception):
    """Base class for all library errors."""


class AlphabetError(MatcompError, ValueError):
    """A letter lies outside the configured alphabet, or two alphabets were mixed."""


class CompositionError(MatcompError, ValueError):
    """A grid violates the matrix-composition invariants."""


class DomainError(MatcompError, ValueError):
    """An operation was called outside its domain (e.g. lm of zero)."""


class ContractViolation(MatcompError, ValueError):
    """A user-supplied map broke the contract required by the caller."""


class SizeCapExceeded(MatcompError, RuntimeError):
    """An enumeration would exceed the configured term cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} enumerated index pairs exceeds cap {cap}")
        self.count = count
        self.cap = cap


class ParseError(MatcompError, ValueError):
    """Syntax error in the expression language, with a 1-based position."""

    def __init__(self, message: str, text: str = "", offset: int = 0):
        line = text.count("\n", 0, offset) + 1
        column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
