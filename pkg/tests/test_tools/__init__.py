"""
Package: tests.test_tools
Purpose: Command-line tools and entry point
"""
