"""
brauerchar - Characteristic maps of Brauer algebra idempotents

Package: src
Purpose: Root package for the exact-arithmetic library and its command line
Status: Complete
"""

__version__ = "0.1.0"
__all__ = []
