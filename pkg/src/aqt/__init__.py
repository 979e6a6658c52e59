"""Affine permutations, Shi arrangements and q,t-statistics with exact arithmetic."""

from .afperm import Window, compose, identity, invert
from .errors import AqtError

__all__ = ["Window", "compose", "identity", "invert", "AqtError"]
__version__ = "0.1.0"
