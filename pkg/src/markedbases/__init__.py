"""Marked bases over quasi-stable ideals: exact linear-algebra decisions for
Cohen-Macaulay, Gorenstein, and complete-intersection structure."""

__version__ = "0.1.0"
