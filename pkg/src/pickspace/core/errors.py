"""Error hierarchy for the numerical core and the command line."""

from typing import Any

import numpy as np
import scipy.linalg

from ..utils.logging import setup_logging

logger = setup_logging(__name__)

VALIDATION_EXIT_CODE = 2
NUMERICAL_EXIT_CODE = 3


class PickSpaceError(Exception):
    """Base class for toolkit exceptions."""

    exit_code = NUMERICAL_EXIT_CODE

    def __init__(
        self,
        message: str,
        operation: str = "",
        details: dict[str, Any] | None = None,
    ) -> None:
        """Initialize the error.

        Args:
            message: Error message
            operation: Name of the operation that failed
            details: Additional error details
        """
        self.message = message
        self.operation = operation
        self.details = details or {}
        super().__init__(f"{operation}: {message}" if operation else message)


class InputError(PickSpaceError):
    """Base class for errors caused by invalid arguments or documents."""

    exit_code = VALIDATION_EXIT_CODE


class InvalidInputError(InputError):
    """Error raised when an argument violates an operation's precondition."""


class IndexBoundsError(InputError):
    """Error raised when a kernel index is out of range."""


class IndexOverlapError(InputError):
    """Error raised when the distinguished index also belongs to the zero set."""


class SizeMismatchError(InputError):
    """Error raised when two objects must have the same number of kernels or points."""


class DimensionMismatchError(InputError):
    """Error raised when two ball points live in balls of different dimension."""


class BoundaryPointError(InputError):
    """Error raised when a point is not strictly inside the unit ball."""


class DocumentParseError(InputError):
    """Error raised when an input document cannot be read."""

    def __init__(
        self,
        message: str,
        source: str,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        """Initialize the error.

        Args:
            message: Error message
            source: Name of the document (file path or "<stdin>")
            line: 1-based line of the problem, when known
            column: 1-based column of the problem, when known
        """
        self.source = source
        self.line = line
        self.column = column
        anchor = source
        if line is not None:
            anchor = f"{source}:{line}"
            if column is not None:
                anchor = f"{anchor}:{column}"
        super().__init__(message, anchor, {"line": line, "column": column})


class NumericalError(PickSpaceError):
    """Base class for numerical failures."""


class SingularGramError(NumericalError):
    """Error raised when a Gram matrix is singular or not positive definite."""


class DegenerateGramError(NumericalError):
    """Error raised when a Gram matrix has a zero entry (two orthogonal kernels)."""


class DuplicatePointsError(NumericalError):
    """Error raised when a point set repeats a point."""


class NotCompletePickError(NumericalError):
    """Error raised when a Gram matrix fails the complete Pick criterion."""


class NotInFError(NotCompletePickError):
    """Error raised when classification is requested for a space outside F."""


class InvalidWitnessError(NumericalError):
    """Error raised when a rescaling witness does not produce the claimed matrix."""


class NotOrthogonalError(NumericalError):
    """Error raised when a Gram matrix is required to be an orthogonal matrix."""


class ZeroPivotError(NumericalError):
    """Error raised when a Schur complement pivot vanishes."""


class VerificationError(NumericalError):
    """Error raised when an internal identity fails to verify."""


def handle_numerical_error(error: Exception, operation: str) -> PickSpaceError:
    """Convert a generic exception to a PickSpaceError.

    Args:
        error: Original exception
        operation: Name of the operation that failed

    Returns:
        PickSpaceError: Wrapped error
    """
    if isinstance(error, PickSpaceError):
        return error

    logger.error(f"Error in {operation}: {error!s}")

    if isinstance(error, np.linalg.LinAlgError | scipy.linalg.LinAlgError):
        return SingularGramError(str(error), operation)
    if isinstance(error, ValueError):
        return InvalidInputError(str(error), operation)
    if isinstance(error, FloatingPointError | ZeroDivisionError):
        return NumericalError(str(error), operation)
    return PickSpaceError(str(error), operation)
