"""
Middleware Package
File: app/gateway/middleware/__init__.py
Created: 2025-09-25
Purpose: Decorators wrapped around every command: error mapping and logging
"""

from .error_handler import (
    EXIT_ERROR,
    EXIT_NOT_CONVERGED,
    EXIT_OK,
    exit_unless_converged,
    handle_cli_errors,
    report_error,
)
from .logging import log_command
