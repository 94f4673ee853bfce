"""
Boolean Ring Kit Error Handling Module

Exception hierarchy, validation, decorators and logging setup.
"""

from .exceptions import (
    BoolRingBaseException,
    ErrorCategory,
    ErrorSeverity,
    ErrorContext,
    SourceSpan,
    ValidationException,
    InvalidInputException,
    ConfigurationException,
    DuplicateLabelException,
    UnknownLabelException,
    GroundMismatchException,
    LengthMismatchException,
    OutOfRangeException,
    AlgebraException,
    ZeroRingException,
    ImproperIdealException,
    UnverifiedDecompositionException,
    NotPrimeException,
    HypothesisFailedException,
    NotAnAtomException,
    OracleBoundExceededException,
    ParseException,
    NameResolutionException,
    VerificationFailedException,
    ExceptionFactory
)

from .validators import (
    Validator,
    StringValidator,
    NumberValidator,
    ListValidator,
    validate_label,
    validate_number,
    validate_list,
    validate_bits,
    validate_bound,
    validate_setting
)

from .decorators import (
    with_error_handling,
    log_execution
)

from .logging import (
    ErrorLogFormatter,
    ErrorLogger,
    get_error_logger,
    setup_error_logging
)

__all__ = [
    # Exceptions
    "BoolRingBaseException",
    "ErrorCategory",
    "ErrorSeverity",
    "ErrorContext",
    "SourceSpan",
    "ExceptionFactory",
    "ValidationException",
    "InvalidInputException",
    "ConfigurationException",
    "DuplicateLabelException",
    "UnknownLabelException",
    "GroundMismatchException",
    "LengthMismatchException",
    "OutOfRangeException",
    "AlgebraException",
    "ZeroRingException",
    "ImproperIdealException",
    "UnverifiedDecompositionException",
    "NotPrimeException",
    "HypothesisFailedException",
    "NotAnAtomException",
    "OracleBoundExceededException",
    "ParseException",
    "NameResolutionException",
    "VerificationFailedException",

    # Validators
    "Validator",
    "StringValidator",
    "NumberValidator",
    "ListValidator",
    "validate_label",
    "validate_number",
    "validate_list",
    "validate_bits",
    "validate_bound",
    "validate_setting",

    # Decorators
    "with_error_handling",
    "log_execution",

    # Logging
    "ErrorLogFormatter",
    "ErrorLogger",
    "get_error_logger",
    "setup_error_logging"
]
