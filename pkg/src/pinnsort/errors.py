"""Exception types."""


class PermutationError(ValueError):
    """Input is not a permutation of 1..n; ``index`` points at the offending entry."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class ReversalError(ValueError):
    """Reversal endpoints are sentinels, missing, or out of order."""


class InvariantError(RuntimeError):
    """The sorter produced a state its correctness argument rules out.

    Never expected on valid input; it signals an implementation bug.
    """


class FormatError(ValueError):
    """Text input could not be parsed."""
