"""Exact root-datum combinatorics behind flag-variety dimension bounds."""

__version__ = "0.1.0"
