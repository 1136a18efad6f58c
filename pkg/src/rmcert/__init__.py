"""Exact verification engine for classical and quantum r-matrices of shift-by-one type."""

__version__ = "0.1.0"
