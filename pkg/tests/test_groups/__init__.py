"""
Package: tests.test_groups
Purpose: Dimension formulas
"""
