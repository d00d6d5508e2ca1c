"""
Package: tests.test_symfunc
Purpose: Schur and double Schur polynomials
"""
