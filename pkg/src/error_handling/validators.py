"""
Input Validation Utilities

Validation for ground labels, integer arguments, exhaustive-search bounds and
bit tables, with detailed error messages.
"""

import re
from typing import Any, Optional, List, Sequence
import logging

from .exceptions import (
    InvalidInputException,
    ConfigurationException,
    OracleBoundExceededException,
    OutOfRangeException,
    ValidationException
)


logger = logging.getLogger(__name__)


class Validator:
    """Base validator class"""

    def __init__(self, field_name: Optional[str] = None):
        self.field_name = field_name or "value"

    def validate(self, value: Any) -> Any:
        """
        Validate value and return it if valid.

        Raises:
            ValidationException: If validation fails
        """
        raise NotImplementedError()

    def _raise_error(self, message: str, **kwargs):
        """Raise validation error with context"""
        raise InvalidInputException(
            message,
            field=self.field_name,
            **kwargs
        )


class StringValidator(Validator):
    """Validate string with various constraints"""

    def __init__(
        self,
        field_name: Optional[str] = None,
        min_length: Optional[int] = None,
        max_length: Optional[int] = None,
        pattern: Optional[str] = None,
        not_empty: bool = False
    ):
        super().__init__(field_name)
        self.min_length = min_length
        self.max_length = max_length
        self.pattern = re.compile(pattern) if pattern else None
        self.not_empty = not_empty

    def validate(self, value: Any) -> str:
        if not isinstance(value, str):
            self._raise_error(
                f"{self.field_name} must be a string, got {type(value).__name__}",
                expected_type="str",
                actual_value=value
            )

        if self.not_empty and not value.strip():
            self._raise_error(f"{self.field_name} cannot be empty")

        if self.min_length is not None and len(value) < self.min_length:
            self._raise_error(
                f"{self.field_name} must be at least {self.min_length} characters, "
                f"got {len(value)}"
            )

        if self.max_length is not None and len(value) > self.max_length:
            self._raise_error(
                f"{self.field_name} must be at most {self.max_length} characters, "
                f"got {len(value)}"
            )

        if self.pattern and not self.pattern.match(value):
            self._raise_error(
                f"{self.field_name} does not match required pattern, got '{value}'"
            )

        return value


class NumberValidator(Validator):
    """Validate integer values (bools are rejected)"""

    def __init__(
        self,
        field_name: Optional[str] = None,
        min_value: Optional[int] = None,
        max_value: Optional[int] = None,
        non_negative: bool = False
    ):
        super().__init__(field_name)
        self.min_value = min_value
        self.max_value = max_value
        self.non_negative = non_negative

    def validate(self, value: Any) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            self._raise_error(
                f"{self.field_name} must be an integer, got {type(value).__name__}",
                expected_type="int",
                actual_value=value
            )

        if self.non_negative and value < 0:
            self._raise_error(
                f"{self.field_name} must be a natural number, got {value}"
            )

        if self.min_value is not None and value < self.min_value:
            raise OutOfRangeException(
                f"{self.field_name} must be >= {self.min_value}, got {value}",
                value=value,
                field=self.field_name
            )

        if self.max_value is not None and value > self.max_value:
            raise OutOfRangeException(
                f"{self.field_name} must be <= {self.max_value}, got {value}",
                value=value,
                field=self.field_name
            )

        return value


class ListValidator(Validator):
    """Validate sequence values"""

    def __init__(
        self,
        field_name: Optional[str] = None,
        item_validator: Optional[Validator] = None,
        min_length: Optional[int] = None,
        max_length: Optional[int] = None,
        allowed_items: Optional[Sequence[Any]] = None
    ):
        super().__init__(field_name)
        self.item_validator = item_validator
        self.min_length = min_length
        self.max_length = max_length
        self.allowed_items = set(allowed_items) if allowed_items is not None else None

    def validate(self, value: Any) -> List[Any]:
        if isinstance(value, (str, bytes)) or not hasattr(value, "__iter__"):
            self._raise_error(
                f"{self.field_name} must be a sequence, got {type(value).__name__}",
                expected_type="sequence",
                actual_value=value
            )

        value_list = list(value)

        if self.min_length is not None and len(value_list) < self.min_length:
            self._raise_error(
                f"{self.field_name} must have at least {self.min_length} items, "
                f"got {len(value_list)}"
            )

        if self.max_length is not None and len(value_list) > self.max_length:
            self._raise_error(
                f"{self.field_name} must have at most {self.max_length} items, "
                f"got {len(value_list)}"
            )

        if self.allowed_items is not None:
            for i, item in enumerate(value_list):
                if item not in self.allowed_items:
                    self._raise_error(
                        f"{self.field_name}[{i}] must be one of "
                        f"{sorted(self.allowed_items)}, got {item!r}"
                    )

        if self.item_validator:
            validated_items = []
            for i, item in enumerate(value_list):
                try:
                    validated_items.append(self.item_validator.validate(item))
                except ValidationException as e:
                    self._raise_error(
                        f"{self.field_name}[{i}]: {e.message}"
                    )
            return validated_items

        return value_list


LABEL_PATTERN = r"^[A-Za-z0-9_][A-Za-z0-9_.\-]*$"


# Convenience validation functions
def validate_label(value: Any, field_name: str = "label") -> str:
    """Validate a ground-set label"""
    return StringValidator(field_name, not_empty=True, pattern=LABEL_PATTERN).validate(value)


def validate_number(
    value: Any,
    field_name: str,
    **kwargs
) -> int:
    """Validate integer value"""
    return NumberValidator(field_name, **kwargs).validate(value)


def validate_list(
    value: Any,
    field_name: str,
    **kwargs
) -> List[Any]:
    """Validate sequence value"""
    return ListValidator(field_name, **kwargs).validate(value)


def validate_bits(value: Any, field_name: str = "bits") -> List[int]:
    """Validate a 0/1 table"""
    return [int(b) for b in ListValidator(field_name, allowed_items=(0, 1)).validate(value)]


def validate_bound(operation: str, size: int, bound: int) -> int:
    """Reject exhaustive work above its bound"""
    if size > bound:
        logger.debug(f"{operation} refused: size {size} exceeds bound {bound}")
        raise OracleBoundExceededException(operation, size, bound)
    return size


def validate_setting(value: Any, key: str, min_value: int, max_value: Optional[int] = None) -> int:
    """Validate an integer configuration setting"""
    try:
        return validate_number(value, key, min_value=min_value, max_value=max_value)
    except ValidationException as e:
        raise ConfigurationException(e.message, config_key=key) from e
