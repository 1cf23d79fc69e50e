"""Exception types shared across the toolkit."""


class KempetoolsError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(KempetoolsError, ValueError):
    """Malformed graph6 or edge-list input."""


class ImproperColoringError(KempetoolsError, ValueError):
    """A colouring violates properness or basic shape constraints."""


class InvalidMoveError(KempetoolsError, ValueError):
    """A Kempe move does not apply to the colouring it was given."""


class CeilingExceededError(KempetoolsError, RuntimeError):
    """Enumeration would produce more colourings than the configured ceiling."""


class NotEquivalentError(KempetoolsError, RuntimeError):
    """The two colourings lie in different Kempe classes.

    Raised by the solver for the one genuine obstruction it can meet at
    k=3: a prism component whose endpoint colourings sit in different
    classes.  Carries the canonical representatives of the two classes.
    """

    def __init__(self, message, class_a=None, class_b=None):
        super().__init__(message)
        self.class_a = class_a
        self.class_b = class_b


class SolverInternalError(KempetoolsError, RuntimeError):
    """A structural fact the case machinery relies on failed at runtime.

    This always signals an implementation bug, never bad input.
    """


class RepartnerContractError(KempetoolsError, RuntimeError):
    """A repartner procedure returned a colouring without the promised
    change of like-coloured pair.  Carries the offending colouring."""

    def __init__(self, message, coloring=None):
        super().__init__(message)
        self.coloring = coloring
