"""Exception hierarchy.

Everything a caller can trigger with bad input derives from :class:`InputError`;
the CLI maps those to exit code 2 and :class:`SizeLimitError` to exit code 3.
"""


class PosetShuffleError(Exception):
    pass


class InputError(PosetShuffleError):
    pass


class CycleError(InputError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("order is not antisymmetric: " + " <= ".join(self.cycle))


class UnknownEventError(InputError):
    def __init__(self, event):
        self.event = event
        super().__init__(f"unknown event {event!r}")


class ArityError(InputError):
    pass


class DoesNotFitError(InputError):
    """Raised when a trajectory does not fit its operands; ``index`` is 1-based."""

    def __init__(self, index, expected, actual):
        self.index = index
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"trajectory does not fit operand {index}: "
            f"it reads {expected} symbol(s) but the word has {actual}"
        )


class EmptyLanguageError(InputError):
    pass


class NonUniformLanguageError(InputError):
    pass


class TraceNotInLanguageError(InputError):
    pass


class DisjointnessError(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class SchemaError(InputError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class SizeLimitError(PosetShuffleError):
    def __init__(self, what, limit):
        self.limit = limit
        super().__init__(f"{what} exceeds the configured cap of {limit}")


class InvariantError(PosetShuffleError):
    """An internal consistency check failed; always a bug, never bad input."""
