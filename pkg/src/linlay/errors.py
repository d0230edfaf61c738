"""Shared exception types."""


class InvalidParameterError(ValueError):
    """An argument violates an operation's stated precondition."""


class ResourceLimitError(RuntimeError):
    """A configured budget was exceeded.

    Carries whatever bounds were established before the budget ran out
    (``lower``/``upper`` may be None when nothing was computed).
    """

    def __init__(self, message, lower=None, upper=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class PreconditionViolationError(ValueError):
    """Input data contradicts a structural assumption; names the offender."""


class FamilyTooSmallError(Exception):
    """A path family supports neither the requested chain nor antichain."""

    def __init__(self, longest_chain, largest_antichain, required_c, required_d):
        super().__init__(
            f"family supports a chain of {longest_chain} and an antichain of "
            f"{largest_antichain}; needed {required_c} or {required_d}"
        )
        self.longest_chain = longest_chain
        self.largest_antichain = largest_antichain
        self.required_c = required_c
        self.required_d = required_d


class InternalInvariantError(AssertionError):
    """A condition the algorithms guarantee internally did not hold."""
