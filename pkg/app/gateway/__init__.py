"""
Gateway Module
File: app/gateway/__init__.py
Created: 2025-09-25
Purpose: Command-line surface: command modules, middleware decorators and console reports
"""

__module_name__ = "gateway"
__description__ = "typer commands, exit-code handling and rich reports"
