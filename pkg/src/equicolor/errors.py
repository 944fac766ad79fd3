"""Exception types shared across the package."""


class EquicolorError(Exception):
    """Base class for all package errors."""


class PreconditionViolated(EquicolorError):
    """An algorithm was invoked outside its guaranteed parameter regime."""


class BudgetExceeded(EquicolorError):
    """An exact search exceeded its configured node budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class MatchingInfeasible(EquicolorError):
    """No perfect assignment of new vertices to color classes exists."""


class NoAugmentingPath(EquicolorError):
    """An over-full class has no relay path to a smallest class."""


class AttemptsExhausted(EquicolorError):
    """No randomized attempt satisfied the acceptance event."""


class FormatError(EquicolorError):
    """A file did not conform to the expected line-oriented format."""
