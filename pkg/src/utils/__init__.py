"""
Utilities Module

Package: src.utils
Purpose: Logging, exceptions, constants and run configuration
Status: Complete
"""

__all__ = []
