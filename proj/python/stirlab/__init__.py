"""Exact 1/k-Eulerian polynomials, k-Stirling permutations and their statistics.

Polynomials are lists of Python ints in ascending degree; words and
permutations are lists of 1-based letters.
"""

from ._stirlab import *  # noqa: F401,F403
from ._stirlab import NonDivisibleError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
