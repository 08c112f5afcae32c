"""
Integer helpers for the closed-form coefficient formulas.
"""

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def binomial(top: int, bottom: int) -> int:
    """
    ``C(top, bottom)`` extended by zero: returns 0 whenever
    ``bottom < 0``, ``top < 0`` or ``bottom > top``, so truncated sums
    need no special cases.
    """
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return comb(top, bottom)
