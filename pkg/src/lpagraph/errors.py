"""Exception hierarchy shared by every module."""


class LPAGraphError(Exception):
    """Base class for all errors raised by lpagraph."""


class GraphSyntaxError(LPAGraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphStructureError(LPAGraphError):
    """Duplicate names, undeclared endpoints and similar malformed graphs."""


class UnknownVertexError(LPAGraphError, KeyError):
    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown vertex: {self.name!r}"


class DomainError(LPAGraphError):
    """A well-formed request whose input violates a mathematical precondition."""


class NotHereditarySaturatedError(DomainError):
    pass


class CapExceededError(DomainError):
    def __init__(self, size, cap, what="enumeration"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} over {size} vertices exceeds cap {cap}")


class InfiniteEmitterError(DomainError):
    """Raised by constructions that are only defined for row-finite graphs."""


class ShiftSpecError(DomainError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class InvariantError(AssertionError):
    """An internal invariant failed. This always indicates a bug."""
