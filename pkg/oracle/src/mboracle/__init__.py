"""Independent fixture generator for the markedbases test suite.

Recomputes a small battery of saturation, socle, and minimal-generator
verdicts by elementary linear algebra and one Gröbner call (via sympy),
then freezes them as JSON fixtures the main package replays through its
command line.  Nothing in here imports the library under test.
"""

from .generate import fixtures, main

__all__ = ["fixtures", "main"]
