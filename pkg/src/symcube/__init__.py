"""Symmetric-cube L-function data for level-1 eigenforms."""

__version__ = "0.1.0"
