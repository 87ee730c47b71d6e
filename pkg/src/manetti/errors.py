"""Exception types shared by every module."""


class InvalidInput(ValueError):
    """An argument violates an operation's precondition."""


class CatalogueError(RuntimeError):
    """A computed object contradicts the classification it should belong to."""


class InconsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""
