"""Small exact-arithmetic primitives used throughout the package.

Everything here works on plain Python integers, which are already
arbitrary precision; the point of this module is to pin down the two
conventions that all the combinatorial formulas rely on.
"""

import math


def binom(a: int, k: int) -> int:
    """Binomial coefficient with the convention that it vanishes
    unless 0 <= k <= a.

    In particular binom(a, k) == 0 for every negative a and k >= 1,
    which is what makes the coefficient recurrences terminate.
    """
    if k < 0 or a < 0 or k > a:
        return 0
    return math.comb(a, k)


def plus_part(a: int) -> int:
    """max(a, 0), the positive part of an integer."""
    return a if a > 0 else 0
