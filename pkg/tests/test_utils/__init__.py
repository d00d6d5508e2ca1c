"""
Package: tests.test_utils
Purpose: Configuration and logging helpers
"""
