"""
Shared Kernel Module
File: app/shared_kernel/__init__.py
Created: 2025-09-02
Purpose: Common utilities, exceptions and constants shared across modules
This module provides reusable components to avoid code duplication and ensure consistency.
"""

__module_name__ = "shared_kernel"
__description__ = "Shared constants, exceptions, validators, settings and logging"

from .constants import *
from .exceptions import *
from .validators import *
from .logging import configure_logging, get_logger
from .settings import ElastiNetSettings, get_settings, load_settings, reset_settings, use_config
