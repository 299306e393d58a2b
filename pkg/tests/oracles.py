"""Independent reference computations used to freeze expected values.

Nothing here calls the solver or the vectorized distance code.
"""
from __future__ import annotations

import itertools
import math


def line_dist(p: float, q: float) -> float:
    return abs(p - q)


def definitional_distance(xs, ys, d, e, extra: int = 0) -> float:
    """Minimum over all pairings after padding both lists to ``len(xs)+len(ys)+extra``."""
    n = len(xs) + len(ys) + extra
    n = max(n, 1)
    a = list(xs) + [e] * (n - len(xs))
    b = list(ys) + [e] * (n - len(ys))
    return min(math.fsum(d(a[i], b[s[i]]) for i in range(n)) for s in itertools.permutations(range(n)))


def brute_min_cost(matrix) -> float:
    n = len(matrix)
    return min(sum(matrix[i][s[i]] for i in range(n)) for s in itertools.permutations(range(n)))
