"""Exact poly-Euler numbers of the second kind and their relatives."""

__version__ = "1.0.0"
