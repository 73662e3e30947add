# src/errors.py
"""Exception hierarchy shared by every module of the package."""


class ForestError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(ForestError, ValueError):
    """An argument violates the documented preconditions."""


class EmptyInput(InvalidInput):
    pass


class BadVertex(InvalidInput):
    pass


class ParseError(InvalidInput):
    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ResourceLimit(ForestError):
    def __init__(self, limit: str, value: int, cap: int):
        self.limit = limit
        self.value = value
        self.cap = cap
        super().__init__(f"{limit} is {value}, above the cap of {cap}")


class NotAFacet(ForestError):
    pass


class NotAPermutation(ForestError):
    pass


class ConditionViolated(ForestError):
    def __init__(self, message: str, k: int):
        self.k = k
        super().__init__(message)


class InvalidSequences(ForestError):
    """(delta, e) sequences that the forest construction cannot consume.

    ``reason`` is one of: unsorted, collision, not-interleaved, top-not-d,
    length, non-positive.
    """

    def __init__(self, reason: str, detail: str, index: int | None = None):
        self.reason = reason
        self.index = index
        super().__init__(f"{reason}: {detail}")


class NotRealizable(ForestError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(
            f"not a quasi-forest f-vector (suffix sum at k = {verdict.failing_index} is not positive)"
        )


class ConsistencyError(ForestError):
    """Two independent computations of the same quantity disagreed."""
