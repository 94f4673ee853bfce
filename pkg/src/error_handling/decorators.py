"""
Error Handling Decorators

Decorators for converting unexpected failures into the exception hierarchy
and for timing the exhaustive operations.
"""

import functools
import logging
import time
import traceback
from typing import Callable, Any

from .exceptions import (
    BoolRingBaseException,
    ExceptionFactory,
    ErrorContext
)


logger = logging.getLogger(__name__)


def with_error_handling(
    reraise: bool = True,
    default_return: Any = None,
    log_errors: bool = True
):
    """
    Decorator to convert any exception escaping a function into a
    BoolRingBaseException.

    Args:
        reraise: Whether to reraise exceptions after handling
        default_return: Default value to return on error (if not reraising)
        log_errors: Whether to log errors

    Usage:
        @with_error_handling()
        def run_script(path: str) -> int:
            ...
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except BoolRingBaseException as e:
                if log_errors:
                    logger.debug(f"Error in {func.__name__}: {e}")

                if reraise:
                    raise
                return default_return

            except Exception as e:
                context = ErrorContext(
                    module=func.__module__,
                    function=func.__name__,
                    additional_data={"args": str(args)[:100], "kwargs": str(kwargs)[:100]}
                )

                converted = ExceptionFactory.from_exception(e, context=context)

                if log_errors:
                    logger.error(
                        f"Error in {func.__name__}: {e}\n"
                        f"Traceback: {traceback.format_exc()}"
                    )

                if reraise:
                    raise converted from e
                return default_return

        return wrapper

    return decorator


def log_execution(
    level: int = logging.DEBUG,
    include_args: bool = True,
    include_result: bool = False,
    include_duration: bool = True
):
    """
    Decorator to log function execution.

    Args:
        level: Logging level
        include_args: Whether to log function arguments
        include_result: Whether to log function result
        include_duration: Whether to log execution duration

    Usage:
        @log_execution()
        def unique_decomposition_search(ideal):
            ...
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()

            log_msg = f"Executing {func.__name__}"
            if include_args:
                log_msg += f" with args={str(args[:3])[:120]}, kwargs={list(kwargs.keys())}"
            logger.log(level, log_msg)

            try:
                result = func(*args, **kwargs)

                duration = time.perf_counter() - start_time
                log_msg = f"Completed {func.__name__}"
                if include_duration:
                    log_msg += f" in {duration:.3f}s"
                if include_result:
                    log_msg += f" with result={str(result)[:100]}"
                logger.log(level, log_msg)

                return result

            except Exception as e:
                duration = time.perf_counter() - start_time
                logger.log(level, f"Failed {func.__name__} after {duration:.3f}s: {e}")
                raise

        return wrapper

    return decorator
