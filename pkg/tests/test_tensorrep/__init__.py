"""
Package: tests.test_tensorrep
Purpose: Tensor representation and idempotents
"""
