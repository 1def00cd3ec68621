class GelfandError(Exception):
    """
    Base error of every computation and parser in the project.

    Attributes:
        status (str): Report status the error maps to, "fail" or "error".
        exit_code (int): Process exit code used by the command-line surface.
        payload (dict): Structured evidence copied into the report.

    """

    status = "error"
    exit_code = 1

    def __init__(self, message: str, **payload):
        super().__init__(message)
        self.message = message
        self.payload = payload


# --------------------
# --- Input errors ---
# --------------------


class InputError(GelfandError):
    exit_code = 2


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message, line=line)
        self.line = line

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"


class UnknownGallery(InputError):
    def __init__(self, name: str, available: list[str]):
        super().__init__(f"Unknown gallery algebra '{name}'.", available=available)


class DimensionMismatch(InputError):
    pass


class AxiomViolation(InputError):
    def __init__(self, axiom: str, max_residual: float):
        super().__init__(
            f"Algebra violates {axiom} (max residual {max_residual:.3e}).",
            axiom=axiom,
            max_residual=max_residual,
        )
        self.axiom = axiom
        self.max_residual = max_residual


class AlgebraMismatch(InputError):
    pass


class SizeOverflow(InputError):
    pass


class MetricViolation(InputError):
    def __init__(self, condition: str, residual: float):
        super().__init__(
            f"Distance matrix is not a metric: {condition} (residual {residual:.3e}).",
            condition=condition,
            residual=residual,
        )
        self.condition = condition


class NotAFunctionAlgebra(InputError):
    def __init__(self, condition: str, message: str):
        super().__init__(message, condition=condition)
        self.condition = condition


# ----------------------------
# --- Computational errors ---
# ----------------------------


class NotInvertible(GelfandError):
    def __init__(self, smallest_singular_value: float):
        super().__init__(
            "Element is not invertible.",
            smallest_singular_value=smallest_singular_value,
        )
        self.smallest_singular_value = smallest_singular_value


class CharacterSolveFailure(GelfandError):
    def __init__(self, worst_residual: float, attempts: int):
        super().__init__(
            f"No character survived refinement after {attempts} attempts.",
            worst_residual=worst_residual,
            attempts=attempts,
        )
        self.worst_residual = worst_residual


class NumericalFailure(GelfandError):
    def __init__(self, residual: float, message: str = "Residual in the ambiguous zone."):
        super().__init__(message, residual=residual)
        self.residual = residual


class LiftFailure(GelfandError):
    def __init__(self, reason: str, residual: float):
        super().__init__(f"Character does not lift: {reason}.", reason=reason, residual=residual)
        self.reason = reason
        self.residual = residual


class SemisimplicityRequired(GelfandError):
    def __init__(self, operation: str):
        super().__init__(
            f"'{operation}' needs a semisimple algebra.", operation=operation
        )


class UnexpectedFailure(GelfandError):
    """A library or programming error escaped a computation."""

    def __init__(self, error: Exception):
        super().__init__(f"Computation aborted: {error}", cause=type(error).__name__)


# -----------------------------------
# --- Oracle and property failures ---
# -----------------------------------


class OracleDisagreement(GelfandError):
    """Two independent computations of the same set disagree beyond tolerance."""

    status = "fail"


class AnalysisAssertionFailure(GelfandError):
    status = "fail"

    def __init__(self, message: str, step: int | None = None, **payload):
        super().__init__(message, step=step, **payload)
        self.step = step
