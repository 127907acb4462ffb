from .common_utils import (
    CommandExit,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    format_float,
    format_label,
    handle_command_errors,
    log_and_exit,
)

__all__ = [
    "CommandExit",
    "EXIT_FAILURE",
    "EXIT_OK",
    "EXIT_USAGE",
    "format_float",
    "format_label",
    "handle_command_errors",
    "log_and_exit"
]
