"""Exact polynomial algebra and a staged certificate for the 5+5 splitting question."""

__version__ = "0.1.0"
