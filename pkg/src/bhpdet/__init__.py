"""Exact verification engine for a family of binomial determinants."""

__version__ = "0.1.0"
