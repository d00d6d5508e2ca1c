"""
Package: tests.test_brauer
Purpose: Brauer diagrams and algebra elements
"""
