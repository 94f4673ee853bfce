"""
Exception Hierarchy for the Boolean ring kit

Every error raised by the algebra modules, the expression language and the
verification suite derives from BoolRingBaseException. Each concrete class
carries an error code, a category, a severity and the process exit code the
batch runner reports for it.
"""

from enum import Enum
from typing import Dict, Any, Optional, List, Iterable, Tuple
from dataclasses import dataclass, field
import traceback
import time


class ErrorCategory(Enum):
    """High-level error categories for classification"""
    VALIDATION = "validation"  # Malformed input values
    ALGEBRA = "algebra"  # Mathematically undefined requests
    CAPACITY = "capacity"  # Exhaustive oracle bounds
    PARSE = "parse"  # Expression language syntax
    EVALUATION = "evaluation"  # Session / name resolution
    VERIFICATION = "verification"  # Certificate or property failures
    CONFIGURATION = "configuration"
    UNKNOWN = "unknown"


class ErrorSeverity(Enum):
    """Error severity levels for prioritization"""
    DEBUG = "debug"
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"
    CRITICAL = "critical"


@dataclass
class SourceSpan:
    """Position of a statement or expression in DSL input (1-based)"""
    line: int
    column: int
    end_column: int

    def to_dict(self) -> Dict[str, int]:
        return {"line": self.line, "column": self.column, "end_column": self.end_column}

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}"


@dataclass
class ErrorContext:
    """Rich context information for errors"""
    timestamp: float = field(default_factory=time.time)
    error_id: str = ""
    module: Optional[str] = None
    function: Optional[str] = None
    span: Optional[SourceSpan] = None
    additional_data: Dict[str, Any] = field(default_factory=dict)
    stack_trace: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert context to dictionary for serialization"""
        return {
            "timestamp": self.timestamp,
            "error_id": self.error_id,
            "module": self.module,
            "function": self.function,
            "span": self.span.to_dict() if self.span else None,
            "additional_data": self.additional_data,
            "stack_trace": self.stack_trace
        }


class BoolRingBaseException(Exception):
    """Base exception for all Boolean ring kit errors"""

    exit_code: int = 2

    def __init__(
        self,
        message: str,
        error_code: str = "BOOLRING_ERROR",
        category: ErrorCategory = ErrorCategory.UNKNOWN,
        severity: ErrorSeverity = ErrorSeverity.ERROR,
        recoverable: bool = True,
        context: Optional[ErrorContext] = None,
        original_exception: Optional[Exception] = None,
        recovery_suggestions: Optional[List[str]] = None
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.category = category
        self.severity = severity
        self.recoverable = recoverable
        self.context = context or ErrorContext()
        self.original_exception = original_exception
        self.recovery_suggestions = recovery_suggestions or []

        if not self.context.stack_trace:
            self.context.stack_trace = traceback.format_exc()

    def with_span(self, span: Optional[SourceSpan]) -> "BoolRingBaseException":
        """Attach a DSL source span unless one is already recorded"""
        if span is not None and self.context.span is None:
            self.context.span = span
        return self

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for serialization"""
        return {
            "message": self.message,
            "error_code": self.error_code,
            "category": self.category.value,
            "severity": self.severity.value,
            "recoverable": self.recoverable,
            "exit_code": self.exit_code,
            "context": self.context.to_dict(),
            "recovery_suggestions": self.recovery_suggestions,
            "original_error": str(self.original_exception) if self.original_exception else None
        }

    def __str__(self) -> str:
        if self.context.span is not None:
            return f"[{self.error_code}] {self.message} ({self.context.span})"
        return f"[{self.error_code}] {self.message}"


# Validation Exceptions
class ValidationException(BoolRingBaseException):
    """Base for validation-related errors"""
    def __init__(self, message: str, field: Optional[str] = None, **kwargs):
        kwargs.setdefault("severity", ErrorSeverity.WARNING)
        super().__init__(
            message,
            category=ErrorCategory.VALIDATION,
            recoverable=False,
            **kwargs
        )
        if field:
            self.context.additional_data["field"] = field


class InvalidInputException(ValidationException):
    """Invalid input parameters"""
    exit_code = 16

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        expected_type: Optional[str] = None,
        actual_value: Any = None,
        **kwargs
    ):
        super().__init__(
            message,
            error_code="INVALID_INPUT",
            field=field,
            **kwargs
        )
        if expected_type:
            self.context.additional_data["expected_type"] = expected_type
        if actual_value is not None:
            self.context.additional_data["actual_value"] = str(actual_value)[:100]


class ConfigurationException(ValidationException):
    """Configuration validation errors"""
    exit_code = 17

    def __init__(self, message: str, config_key: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            error_code="CONFIGURATION_ERROR",
            severity=ErrorSeverity.CRITICAL,
            **kwargs
        )
        self.category = ErrorCategory.CONFIGURATION
        if config_key:
            self.context.additional_data["config_key"] = config_key


class DuplicateLabelException(ValidationException):
    """A ground set was declared with a repeated label"""
    exit_code = 4

    def __init__(self, label: str, **kwargs):
        super().__init__(
            f"Duplicate label '{label}' in ground set",
            error_code="DUPLICATE_LABEL",
            field="labels",
            recovery_suggestions=["Give every point of the ground set a distinct label"],
            **kwargs
        )
        self.label = label


class UnknownLabelException(ValidationException):
    """A label is not a point of the ground set in use"""
    exit_code = 5

    def __init__(self, label: str, ground_labels: Iterable[str] = (), **kwargs):
        known = list(ground_labels)
        super().__init__(
            f"Unknown label '{label}'",
            error_code="UNKNOWN_LABEL",
            field="members",
            recovery_suggestions=[f"Use one of {known[:10]}"] if known else [],
            **kwargs
        )
        self.label = label


class GroundMismatchException(ValidationException):
    """Operands come from different ground sets"""
    exit_code = 6

    def __init__(self, left: Tuple[str, ...] = (), right: Tuple[str, ...] = (), **kwargs):
        super().__init__(
            "Operands belong to different ground sets",
            error_code="GROUND_MISMATCH",
            recovery_suggestions=["Build both operands from the same GroundSet"],
            **kwargs
        )
        self.context.additional_data["left"] = list(left)[:10]
        self.context.additional_data["right"] = list(right)[:10]


class LengthMismatchException(ValidationException):
    """A function table does not match the ground size"""
    exit_code = 14

    def __init__(self, expected: int, actual: int, **kwargs):
        super().__init__(
            f"Expected a table of length {expected}, got {actual}",
            error_code="LENGTH_MISMATCH",
            field="bits",
            **kwargs
        )
        self.expected = expected
        self.actual = actual


class OutOfRangeException(ValidationException):
    """A numeric argument lies outside its admissible range"""
    exit_code = 13

    def __init__(self, message: str, value: Any = None, **kwargs):
        super().__init__(
            message,
            error_code="OUT_OF_RANGE",
            **kwargs
        )
        if value is not None:
            self.context.additional_data["value"] = str(value)[:100]


# Algebraic Exceptions
class AlgebraException(BoolRingBaseException):
    """Base for requests the mathematics leaves undefined"""
    def __init__(self, message: str, **kwargs):
        kwargs.setdefault("severity", ErrorSeverity.ERROR)
        super().__init__(
            message,
            category=ErrorCategory.ALGEBRA,
            recoverable=False,
            **kwargs
        )


class ZeroRingException(AlgebraException):
    """Ideal-theoretic question asked of the zero ring"""
    exit_code = 7

    def __init__(self, operation: str = "operation", **kwargs):
        super().__init__(
            f"{operation} is undefined over the zero ring (empty ground set)",
            error_code="ZERO_RING",
            recovery_suggestions=["Declare a ground set with at least one point"],
            **kwargs
        )


class ImproperIdealException(AlgebraException):
    """The unit ideal was given where a proper ideal is required"""
    exit_code = 8

    def __init__(self, operation: str = "operation", **kwargs):
        super().__init__(
            f"{operation} requires a proper ideal, got the unit ideal",
            error_code="IMPROPER_IDEAL",
            **kwargs
        )


class UnverifiedDecompositionException(AlgebraException):
    """Reducedness was requested for a decomposition that failed verification"""
    exit_code = 10

    def __init__(self, message: str = "Decomposition intersection does not equal its target", **kwargs):
        super().__init__(
            message,
            error_code="UNVERIFIED_DECOMPOSITION",
            **kwargs
        )


class NotPrimeException(AlgebraException):
    """An ideal expected to be prime is not"""
    exit_code = 11

    def __init__(self, message: str = "Ideal is not prime", **kwargs):
        super().__init__(message, error_code="NOT_PRIME", **kwargs)


class HypothesisFailedException(AlgebraException):
    """A theorem hypothesis does not hold for the given input"""
    exit_code = 12

    def __init__(self, message: str, **kwargs):
        super().__init__(message, error_code="HYPOTHESIS_FAILED", **kwargs)


class NotAnAtomException(AlgebraException):
    """An element expected to be an atom is not minimal nonzero"""
    exit_code = 15

    def __init__(self, element: str, **kwargs):
        super().__init__(
            f"{element} is not an atom",
            error_code="NOT_AN_ATOM",
            **kwargs
        )


# Capacity Exceptions
class OracleBoundExceededException(BoolRingBaseException):
    """An exhaustive computation was requested above its configured bound"""
    exit_code = 9

    def __init__(self, operation: str, size: int, bound: int, **kwargs):
        super().__init__(
            f"{operation} is exhaustive and limited to size {bound}, got {size}",
            error_code="ORACLE_BOUND_EXCEEDED",
            category=ErrorCategory.CAPACITY,
            severity=ErrorSeverity.WARNING,
            recovery_suggestions=[
                "Use a smaller ground set",
                "Raise the bound with --oracle-max (hard cap applies)"
            ],
            **kwargs
        )
        self.context.additional_data.update({"size": size, "bound": bound})


# Language Exceptions
class ParseException(BoolRingBaseException):
    """Syntax error in DSL input"""
    exit_code = 1

    def __init__(
        self,
        message: str,
        line: int,
        column: int,
        expected: Optional[Iterable[str]] = None,
        **kwargs
    ):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected or ()))
        super().__init__(
            message,
            error_code="PARSE_ERROR",
            category=ErrorCategory.PARSE,
            severity=ErrorSeverity.WARNING,
            **kwargs
        )
        self.context.span = SourceSpan(line, column, column)
        if self.expected:
            self.context.additional_data["expected"] = self.expected

    def __str__(self) -> str:
        text = f"[{self.error_code}] {self.message} at line {self.line}, column {self.column}"
        if self.expected:
            text += f"; expected one of {', '.join(self.expected)}"
        return text


class NameResolutionException(BoolRingBaseException):
    """A DSL name is unbound or bound to the wrong kind of value"""
    exit_code = 2

    def __init__(self, message: str, name: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            error_code="NAME_ERROR",
            category=ErrorCategory.EVALUATION,
            severity=ErrorSeverity.WARNING,
            **kwargs
        )
        if name:
            self.context.additional_data["name"] = name


class VerificationFailedException(BoolRingBaseException):
    """A computed certificate or a checked property did not hold"""
    exit_code = 3

    def __init__(self, message: str, check: Optional[str] = None, **kwargs):
        super().__init__(
            message,
            error_code="VERIFICATION_FAILED",
            category=ErrorCategory.VERIFICATION,
            severity=ErrorSeverity.CRITICAL,
            recoverable=False,
            **kwargs
        )
        if check:
            self.context.additional_data["check"] = check


class ExceptionFactory:
    """Factory for creating appropriate exceptions from generic exceptions"""

    @staticmethod
    def from_exception(
        exc: Exception,
        context: Optional[ErrorContext] = None,
        **kwargs
    ) -> BoolRingBaseException:
        """Convert a generic exception to a Boolean ring kit exception"""
        if isinstance(exc, BoolRingBaseException):
            return exc

        exc_message = str(exc) or type(exc).__name__

        if isinstance(exc, (ValueError, TypeError)):
            return InvalidInputException(
                exc_message,
                context=context,
                original_exception=exc,
                **kwargs
            )

        if isinstance(exc, (KeyError, NameError)):
            return NameResolutionException(
                exc_message,
                context=context,
                original_exception=exc,
                **kwargs
            )

        if isinstance(exc, AssertionError):
            return VerificationFailedException(
                exc_message,
                context=context,
                original_exception=exc,
                **kwargs
            )

        return BoolRingBaseException(
            exc_message,
            error_code="UNKNOWN_ERROR",
            context=context,
            original_exception=exc,
            **kwargs
        )
