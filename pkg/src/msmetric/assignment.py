"""Exact minimum-cost perfect matching on square cost matrices.

:func:`solve_assignment` is a shortest-augmenting-path solver with dual
potentials (the O(n^3) Hungarian / Jonker-Volgenant family). Rows are
inserted one at a time; each insertion runs a Dijkstra-style search over
reduced costs, vectorized across columns with numpy (small problems run
the same loop on plain lists).

:func:`brute_force_assignment` enumerates all n! permutations and serves as
the independent oracle in the test suites.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "Assignment",
    "SizeCapError",
    "DEFAULT_SIZE_CAP",
    "BRUTE_FORCE_MAX",
    "as_cost_matrix",
    "solve_assignment",
    "brute_force_assignment",
    "permutation_cost",
]

DEFAULT_SIZE_CAP = 2000
BRUTE_FORCE_MAX = 8


class SizeCapError(ValueError):
    """Problem size exceeds the configured cap."""


@dataclass(frozen=True)
class Assignment:
    """Row ``i`` is matched to column ``permutation[i]`` (0-based)."""

    permutation: tuple[int, ...]
    total_cost: float


def as_cost_matrix(m) -> np.ndarray:
    c = np.array(m, dtype=float)
    if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] == 0:
        raise ValueError(f"cost matrix must be square and nonempty, got shape {c.shape}")
    if not np.all(np.isfinite(c)):
        raise ValueError("cost matrix has a non-finite entry")
    if np.any(c < 0):
        raise ValueError("cost matrix has a negative entry")
    return c


def permutation_cost(c: np.ndarray, perm) -> float:
    """Sum of ``c[i, perm[i]]``, correctly rounded."""
    return math.fsum(c[np.arange(len(perm)), np.asarray(perm, dtype=np.intp)].tolist())


def solve_assignment(m, size_cap: int = DEFAULT_SIZE_CAP) -> Assignment:
    c = as_cost_matrix(m)
    n = c.shape[0]
    if n > size_cap:
        raise SizeCapError(f"assignment size {n} exceeds cap {size_cap}")
    if n == 1:
        return Assignment((0,), float(c[0, 0]))
    if n <= _SMALL:
        perm = np.array(_shortest_augmenting_path_small(c.tolist()), dtype=np.intp)
    else:
        perm = _shortest_augmenting_path(c)
    return Assignment(tuple(perm.tolist()), permutation_cost(c, perm))


# below this size numpy call overhead dominates; the list version runs the
# identical algorithm
_SMALL = 24


def _shortest_augmenting_path_small(c: list[list[float]]) -> list[int]:
    n = len(c)
    inf = math.inf
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    row_of = [0] * (n + 1)
    way = [0] * (n + 1)
    cols = range(1, n + 1)
    for i in range(1, n + 1):
        row_of[0] = i
        j0 = 0
        minv = [inf] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = row_of[j0]
            row = c[i0 - 1]
            ui = u[i0]
            delta = inf
            j1 = 0
            for j in cols:
                if used[j]:
                    continue
                cur = row[j - 1] - ui - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[row_of[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if row_of[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            row_of[j0] = row_of[j1]
            j0 = j1
    perm = [0] * n
    for j in cols:
        perm[row_of[j] - 1] = j - 1
    return perm


def _shortest_augmenting_path(c: np.ndarray) -> np.ndarray:
    n = c.shape[0]
    inf = math.inf
    # Column 0 is a virtual source; real columns are 1..n. row_of[j] is the
    # 1-based row matched to column j (0 = free).
    u = np.zeros(n + 1)
    v = np.zeros(n + 1)
    row_of = np.zeros(n + 1, dtype=np.intp)
    way = np.zeros(n + 1, dtype=np.intp)
    for i in range(1, n + 1):
        row_of[0] = i
        j0 = 0
        minv = np.full(n + 1, inf)
        used = np.zeros(n + 1, dtype=bool)
        while True:
            used[j0] = True
            i0 = row_of[j0]
            free = ~used
            free[0] = False
            reduced = c[i0 - 1] - u[i0] - v[1:]
            better = free[1:] & (reduced < minv[1:])
            if better.any():
                idx = np.flatnonzero(better) + 1
                minv[idx] = reduced[idx - 1]
                way[idx] = j0
            candidates = np.where(free, minv, inf)
            j1 = int(np.argmin(candidates))
            delta = candidates[j1]
            u[row_of[used]] += delta
            v[used] -= delta
            minv[free] -= delta
            j0 = j1
            if row_of[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            row_of[j0] = row_of[j1]
            j0 = j1
    perm = np.empty(n, dtype=np.intp)
    perm[row_of[1:] - 1] = np.arange(n)
    return perm


@lru_cache(maxsize=BRUTE_FORCE_MAX)
def _all_permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


def brute_force_assignment(m) -> Assignment:
    """Exhaustive minimum over all permutations; ``n <= 8``."""
    c = as_cost_matrix(m)
    n = c.shape[0]
    if n > BRUTE_FORCE_MAX:
        raise SizeCapError(f"brute force limited to n <= {BRUTE_FORCE_MAX}, got {n}")
    perms = _all_permutations(n)
    costs = c[np.arange(n), perms].sum(axis=1)
    # exact tie-break among near-minimal candidates
    near = np.flatnonzero(costs <= costs.min() + 1e-9 * max(1.0, costs.min()))
    best = min(near, key=lambda k: permutation_cost(c, perms[k]))
    perm = perms[best]
    return Assignment(tuple(perm.tolist()), permutation_cost(c, perm))
