"""
Test Suite

Package: tests
Purpose: Test suite for brauerchar
Status: Complete
"""

__all__ = []
