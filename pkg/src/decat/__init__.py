"""Exact algebra for the trace of categorified quantum sl2 and the current algebra."""

__version__ = "0.1.0"
