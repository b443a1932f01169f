"""Conjugacy class sizes of p-regular elements and their common divisor graphs."""

__version__ = "0.1.0"
