"""Exception types shared across the package."""


class LemmaViolation(RuntimeError):
    """A case analysis that the theory guarantees cannot fail did fail.

    This always indicates an implementation bug (or a falsified theorem);
    it is never a normal outcome.
    """


class BudgetExceeded(RuntimeError):
    """An enumeration ran out of budget before finishing.

    Distinct from a negative search result: callers must treat it as
    "unknown", never as "no witness".  ``partial`` carries whatever the
    search had accumulated (e.g. the achieved weight set so far).
    """

    def __init__(self, message: str, *, nodes: int = 0, partial=None):
        super().__init__(message)
        self.nodes = nodes
        self.partial = partial


class CodecError(ValueError):
    """A graph document was rejected; ``code`` names the violated rule."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
