"""Shared exception types."""


class ConstructionError(ValueError):
    """A ring (or ring-like object) could not be built from the given data.

    Raised for bad parameters (GF of a non-prime-power, empty products),
    for tables that violate a ring axiom, and for ideal sets that fail
    closure or absorption.  The message names the first violated condition
    and, where applicable, a witness.
    """


class RingMismatchError(TypeError):
    """Arithmetic was attempted between elements of different rings."""


class BudgetError(RuntimeError):
    """A computation exceeded its configured resource budget.

    ``resume_token``, when set, is an opaque string that lets the
    enumeration engine pick up where it stopped.
    """

    def __init__(self, message: str, resume_token: str | None = None):
        super().__init__(message)
        self.resume_token = resume_token


class ParseError(ValueError):
    """A ring expression failed to parse.

    ``column`` is the 1-based offset of the offending character and
    ``expected`` lists the token kinds that would have been accepted.
    """

    def __init__(self, message: str, column: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.column = column
        self.expected = expected
