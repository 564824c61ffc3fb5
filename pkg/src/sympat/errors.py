"""Exception types shared across the package."""


class SympatError(ValueError):
    """Base class for invalid-input errors."""


class PatternError(SympatError):
    """A juggling pattern (or a set inside one) is malformed.

    ``vertex`` is the index of the first offending vertex when known.
    """

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class PermutationError(SympatError):
    pass


class SizeGuardError(SympatError):
    """Requested rank exceeds the configured enumeration limit."""


class InfeasibleError(RuntimeError):
    """A linear system that theory says is solvable turned out not to be."""
