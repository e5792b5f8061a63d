"""Garside structure computation engine and verification tools."""

__version__ = "0.1.0"
