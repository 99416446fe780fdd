"""
Command Modules
File: app/gateway/commands/__init__.py
Created: 2025-09-25
Purpose: One module per command group, registered on the typer app in app/main.py
"""
