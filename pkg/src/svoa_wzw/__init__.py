"""Exact toolkit for WZW algebras, their Z2 simple-current extensions and N=1 candidates."""

__version__ = "0.1.0"
