"""Exception hierarchy shared by every module of the package."""


class CurveSingError(Exception):
    """Base class for all package errors."""


class FieldError(CurveSingError, ValueError):
    """Bad characteristic, or a value that cannot live in the field."""


class FieldMismatchError(CurveSingError, ValueError):
    pass


class PolySyntaxError(CurveSingError, ValueError):
    """Malformed expression; ``position`` is the 0-based column of the problem."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class ZeroPolynomialError(CurveSingError, ValueError):
    pass


class ExponentOverflowError(CurveSingError, OverflowError):
    pass


class IndeterminateError(CurveSingError):
    """The answer depends on terms beyond the known precision."""


class NotConvenientError(CurveSingError, ValueError):
    pass


class NotReducedError(CurveSingError, ValueError):
    pass


class NotAnEdgeError(CurveSingError, ValueError):
    pass


class StabilizationError(CurveSingError):
    """An iterative search did not settle inside its window."""


class CommonComponentError(CurveSingError):
    """The two curves share a component, so the intersection is infinite."""


class ShearError(CurveSingError):
    """No admissible coordinate shear was found within the attempt budget."""


class WildBranchError(CurveSingError, ValueError):
    pass


class InadmissibleSemigroupError(CurveSingError, ValueError):
    pass


class ConsistencyError(CurveSingError, AssertionError):
    """Two independent routes disagreed. Always a bug, never a user error."""


class SpecError(CurveSingError, ValueError):
    """Invalid or incomplete curve specification."""
