"""
Package: tests.test_storage
Purpose: JSON records
"""
