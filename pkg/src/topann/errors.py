"""Error taxonomy shared by the whole package."""


class InvalidInputError(ValueError):
    """A precondition on the mathematical input is violated."""


class GuardExceededError(RuntimeError):
    """A resource guard (dimension, generator count, search width) was exceeded."""
