"""Common utility functions for reusable logic"""

import logging
import math
import sys
from functools import wraps
from typing import Callable, Any, NoReturn, Optional

from pydantic import ValidationError

from app.exceptions import (
    Degenerate,
    FlatLandscape,
    NotAState,
    OutOfDomain,
    Overflow,
    StepTooLarge,
    StepUnstable,
)

# Logger instance for this module that can be patched in tests
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CommandExit(Exception):
    """Carries an exit code and a one-line diagnostic out of a command"""

    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


def format_float(value: float) -> str:
    """
    Format a float with 17 significant digits (round-trip exact).

    Args:
        value: Number to format

    Returns:
        Shortest-stable text; negative zero is written as 0
    """
    if value == 0.0:
        return "0"
    return format(value, ".17g")


def format_label(value: float) -> str:
    """Compact number used inside file names, e.g. 6.0 -> '6', -0.5 -> '-0.5'"""
    if math.isclose(value, round(value)):
        return str(int(round(value)))
    return format(value, "g")


def handle_command_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Decorator mapping domain errors of a CLI command to the exit-code contract.

    Invalid input exits 2, runtime and numerical failures exit 1; the
    one-line diagnostic is written to stderr.

    Args:
        func: Command returning an exit code

    Returns:
        Wrapped command that never raises
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        operation_name = func.__name__

        try:
            return func(*args, **kwargs)
        except CommandExit as e:
            _report(e.message)
            return e.code
        except (OutOfDomain, ValidationError, StepTooLarge, NotAState) as e:
            # Invalid parameters or flags
            logger.warning(f"Invalid input in {operation_name}: {str(e)}")
            _report(f"invalid input: {_first_line(e)}")
            return EXIT_USAGE
        except (FlatLandscape, Overflow, Degenerate, StepUnstable) as e:
            # Numerically valid request that cannot be completed
            logger.error(f"Computation failed in {operation_name}: {str(e)}")
            _report(f"computation failed: {_first_line(e)}")
            return EXIT_FAILURE
        except OSError as e:
            logger.error(f"Write failed in {operation_name}: {str(e)}")
            _report(f"write failed: {_first_line(e)}")
            return EXIT_FAILURE
        except Exception as e:
            # Handle unexpected errors with full logging
            logger.error(f"Unexpected error in {operation_name}: {str(e)}", exc_info=True)
            _report(f"unexpected error during {operation_name}")
            return EXIT_FAILURE

    return wrapper


def log_and_exit(
    error: Exception,
    operation: str,
    code: int = EXIT_FAILURE,
    user_message: Optional[str] = None
) -> NoReturn:
    """
    Log an error and raise CommandExit with consistent formatting.

    Args:
        error: The original exception
        operation: Description of the operation that failed
        code: Exit code to return from the command
        user_message: Optional custom message for users
    """
    logger.error(f"Error in {operation}: {str(error)}")

    if user_message is None:
        user_message = f"{operation} failed: {_first_line(error)}"

    raise CommandExit(code, user_message)


def _first_line(error: Any) -> str:
    if isinstance(error, ValidationError) and error.errors():
        first = error.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        return f"{location}: {first['msg']}" if location else first["msg"]
    text = str(error).strip()
    return text.splitlines()[0] if text else type(error).__name__


def _report(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
