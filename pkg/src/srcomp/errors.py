"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An argument violates the documented contract of an operation."""


class UnsupportedInputError(ValueError):
    """The operation is well defined but not available for this input."""


class SetSyntaxError(ValueError):
    """A set specification could not be parsed.

    ``position`` is the 0-based character offset where parsing failed, or
    ``None`` for semantic errors that concern the whole specification.
    """

    def __init__(self, message: str, text: str, position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}: {text!r}"
        else:
            message = f"{message}: {text!r}"
        super().__init__(message)


class CeilingExceeded(RuntimeError):
    """Brute-force enumeration would produce more tuples than allowed."""

    def __init__(self, count: int, ceiling: int):
        self.count = count
        self.ceiling = ceiling
        super().__init__(
            f"enumeration would produce {count} compositions "
            f"(ceiling is {ceiling})"
        )
