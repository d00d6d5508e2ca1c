"""
Package: tests.test_young
Purpose: Partitions, tableaux, hooks and characters
"""
