"""Exception hierarchy shared by every module."""


class BoolFnError(ValueError):
    """Base class for all library errors."""


class ParseError(BoolFnError):
    """Malformed ANF, truth-table or vBf text.

    ``column`` is the 1-based position of the offending character, when known.
    """

    def __init__(self, message: str, column: int | None = None, line: int | None = None):
        self.reason = message
        self.column = column
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class DegreeError(BoolFnError):
    """Input degree outside the range an operation is defined for."""


class NotQuadraticError(DegreeError):
    """Degree above 2 where a quadratic (or affine) function is required."""


class AffineFunctionError(DegreeError):
    """Affine input where a genuinely quadratic function is required."""


class ParityError(BoolFnError):
    """Predicate only defined for the other parity of n."""


class SizeCapError(BoolFnError):
    """Problem size exceeds the cap of an exhaustive routine."""


class SingularMatrixError(BoolFnError):
    """Matrix not invertible over GF(2)."""


class InfeasibleConfigError(BoolFnError):
    """Search configuration that cannot be run as requested."""
