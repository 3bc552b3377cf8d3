class ReconError(ValueError):
    """Base class for every error raised by the workbench."""


class GraphError(ReconError):
    pass


class SizeGuardError(ReconError):
    pass


class PreconditionError(ReconError):
    pass


class DeckInconsistencyError(ReconError):
    """The deck cannot come from a graph satisfying the stated preconditions."""

    def __init__(self, message, candidate=None, trace=None):
        super().__init__(message)
        self.candidate = candidate
        self.trace = trace


class Graph6Error(ReconError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class CountingError(ReconError):
    pass
