"""
Custom error classes

Every failure the toolkit reports is a KnotRadarError subclass carrying a
stable code and an optional suggestion for the user.
"""

from typing import Optional


class KnotRadarError(Exception):
    """Base class for toolkit errors"""

    def __init__(self, message: str, code: str = "KNOTRADAR_ERROR", suggestion: Optional[str] = None):
        super().__init__(message)
        self.code = code
        self.message = message
        self.suggestion = suggestion

    def to_dict(self) -> dict:
        """Convert to a plain dict"""
        error_dict = {
            "code": self.code,
            "message": self.message
        }
        if self.suggestion:
            error_dict["suggestion"] = self.suggestion
        return error_dict


class GroupMismatchError(KnotRadarError):
    """Operands live over different groups"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="GROUP_MISMATCH",
            suggestion=suggestion or "push both operands into a common group first"
        )


class InvalidHomomorphismError(KnotRadarError):
    """Matrix does not define a homomorphism between the given groups"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="INVALID_HOMOMORPHISM",
            suggestion=suggestion or "torsion relations of the source must map into relations of the target"
        )


class NotDivisibleError(KnotRadarError):
    """Exact division left a nonzero remainder"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="NOT_DIVISIBLE",
            suggestion=suggestion
        )


class FiniteOrderElementError(KnotRadarError):
    """An infinite-order element was required"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="FINITE_ORDER_ELEMENT",
            suggestion=suggestion or "choose an element with a nonzero free part"
        )


class NotSymmetrizableError(KnotRadarError):
    """No translate of the element is fixed by the involution"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="NOT_SYMMETRIZABLE",
            suggestion=suggestion
        )


class IndeterminateError(KnotRadarError):
    """A torsion computation could not be completed exactly"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="INDETERMINATE",
            suggestion=suggestion or "try a presentation whose meridian is a generator"
        )


class DiagramError(KnotRadarError):
    """A (1,1) diagram violates one of its invariants"""

    def __init__(self, invariant: str, detail: str):
        super().__init__(
            message=f"diagram violates {invariant}: {detail}",
            code="DIAGRAM_ERROR",
            suggestion="check arc endpoints, windings and marks"
        )
        self.invariant = invariant
        self.detail = detail

    def to_dict(self) -> dict:
        error_dict = super().to_dict()
        error_dict["invariant"] = self.invariant
        return error_dict


class ParityError(KnotRadarError):
    """A grading bound would not be an integer"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="PARITY_ERROR",
            suggestion=suggestion or "adjust tau so that every Euler characteristic is even"
        )


class NegativeBlockError(KnotRadarError):
    """The middle block of a five-block splitting is negative"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="NEGATIVE_BLOCK",
            suggestion=suggestion or "increase n"
        )


class MalformedInputError(KnotRadarError):
    """Input data violates its own consistency rules"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="MALFORMED_INPUT",
            suggestion=suggestion
        )


class FileParseError(KnotRadarError):
    """A job file could not be parsed"""

    def __init__(self, file_path: str, line: int, column: int, reason: str):
        super().__init__(
            message=f"failed to parse {file_path}:{line}:{column}: {reason}",
            code="FILE_PARSE_ERROR",
            suggestion="see docs/FORMATS.md for the file grammar"
        )
        self.file_path = file_path
        self.line = line
        self.column = column
        self.reason = reason


class InvalidParameterError(KnotRadarError):
    """Invalid parameter"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="INVALID_PARAMETER",
            suggestion=suggestion or "check the parameter format"
        )


class ConfigurationError(KnotRadarError):
    """Configuration error"""

    def __init__(self, message: str, suggestion: Optional[str] = None):
        super().__init__(
            message=message,
            code="CONFIGURATION_ERROR",
            suggestion=suggestion or "check config/config.yaml"
        )
