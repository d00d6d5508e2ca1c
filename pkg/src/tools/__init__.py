"""
Tools Module

Package: src.tools
Purpose: One tool per command-line verb, plus the verification suites
Status: Complete
"""

__all__ = []
