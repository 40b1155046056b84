"""Exact toolkit for Beauville structures in small finite simple groups."""

__version__ = "0.1.0"
