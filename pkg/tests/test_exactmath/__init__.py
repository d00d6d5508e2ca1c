"""
Package: tests.test_exactmath
Purpose: Exact rationals, polynomials and sparse matrices
"""
