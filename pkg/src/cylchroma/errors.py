"""Exception types raised across the package."""


class CylchromaError(Exception):
    """Base class for all library errors."""


class CycleError(CylchromaError, ValueError):
    """The given relations force a <_P a for some element."""


class SizeError(CylchromaError, ValueError):
    """An input exceeds a desk-scale guard."""


class ShapeError(CylchromaError, ValueError):
    """A partition, skew or cylindric shape violates its invariants."""


class ShiftError(ShapeError):
    """A notation conversion that needs d > 0 was given d = 0."""


class RibbonError(ShapeError):
    """No valid border ribbon of the required size can be removed."""


class ParseError(CylchromaError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoIntersectionError(CylchromaError, ValueError):
    """The requested columns do not intersect."""


class PreconditionError(CylchromaError, ValueError):
    pass


class NotInBError(CylchromaError, ValueError):
    """The glued array is already a P-tableau, so the triple is a fixed point."""


class IntegralityError(CylchromaError, ArithmeticError):
    """A result that must be integral has a non-trivial denominator."""
