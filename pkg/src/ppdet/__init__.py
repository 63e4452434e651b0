"""Exact verification of TSSCPP-related determinant, Pfaffian and constant-term identities."""

__version__ = "0.1.0"
