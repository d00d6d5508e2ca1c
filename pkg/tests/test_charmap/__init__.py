"""
Package: tests.test_charmap
Purpose: Characteristic map closed form and trace oracle
"""
