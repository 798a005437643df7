"""Exception types raised across the toolkit.

The class names are part of the CLI contract: domain errors are reported
with the name of the exception that raised them.
"""


class IntCurvError(Exception):
    """Base class for every domain error in the package."""


class ParseError(IntCurvError, ValueError):
    pass


class SelfLoop(IntCurvError, ValueError):
    pass


class DuplicateEdge(IntCurvError, ValueError):
    pass


class Disconnected(IntCurvError, ValueError):
    pass


class InvalidParameter(IntCurvError, ValueError):
    pass


class SameVertex(IntCurvError, ValueError):
    pass


class AlphaOutOfRange(IntCurvError, ValueError):
    pass


class TooLarge(IntCurvError, ValueError):
    pass


class NonpositiveThreshold(IntCurvError, ValueError):
    pass


class NoStabilization(IntCurvError, RuntimeError):
    """The idleness function did not settle near alpha = 1.

    Mathematically this cannot happen for a finite graph, so seeing it means
    the transport solver returned a wrong value.
    """


class ConvergenceFailure(IntCurvError, RuntimeError):
    pass
