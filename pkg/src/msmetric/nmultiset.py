"""Finite multisets over a pointed metric space and the matching distance.

A multiset is stored canonically: duplicate keys merged, zero
multiplicities dropped, and the basepoint never stored (padding with the
basepoint does not change the class, so the empty multiset is the
identity). Distances pad both sides with basepoints to a common length and
solve the resulting assignment problem exactly.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator

import numpy as np

from msmetric.assignment import DEFAULT_SIZE_CAP, SizeCapError, solve_assignment
from msmetric.ground import Element, GroundSpace

__all__ = [
    "Multiset",
    "SpaceMismatchError",
    "canonicalize",
    "add",
    "matching_distance",
    "matching_distance_padded",
    "padded_list",
    "embed_point",
]

# Test-only fault injection: when set, called on every cost matrix before it
# is solved. Used to check that the verification suites catch broken builds.
_cost_hook: Callable[[np.ndarray], np.ndarray] | None = None


class SpaceMismatchError(ValueError):
    pass


class Multiset:
    """Immutable canonical multiset: element -> positive multiplicity.

    Entries are kept sorted by key. Build with :func:`canonicalize` or
    :meth:`from_elements`; the constructor assumes its input is already
    canonical only when ``_trusted`` is set.
    """

    __slots__ = ("space", "entries", "total_size", "_hash")

    def __init__(self, space: GroundSpace, entries: Iterable[tuple[Element, int]] = (), *, _trusted: bool = False):
        if not _trusted:
            entries = _merge(space, entries)
        self.space = space
        self.entries: tuple[tuple[Element, int], ...] = tuple(entries)
        self.total_size = sum(k for _, k in self.entries)
        self._hash = None

    @classmethod
    def from_elements(cls, space: GroundSpace, elements: Iterable) -> Multiset:
        return canonicalize(space, ((x, 1) for x in elements))

    @classmethod
    def empty(cls, space: GroundSpace) -> Multiset:
        return cls(space, (), _trusted=True)

    def elements(self) -> list[Element]:
        """Elements expanded by multiplicity, in key order."""
        out: list[Element] = []
        for x, k in self.entries:
            out.extend([x] * k)
        return out

    def as_dict(self) -> dict[Element, int]:
        return dict(self.entries)

    def multiplicity(self, x) -> int:
        return self.as_dict().get(self.space.element(x), 0)

    def __iter__(self) -> Iterator[tuple[Element, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.total_size

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiset):
            return NotImplemented
        return self.space == other.space and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.space, self.entries))
        return self._hash

    def __add__(self, other: Multiset) -> Multiset:
        return add(self, other)

    def __repr__(self) -> str:
        body = ", ".join(f"{x!r}: {k}" for x, k in self.entries)
        return f"Multiset({{{body}}})"


def _merge(space: GroundSpace, raw: Iterable[tuple[object, int]]) -> list[tuple[Element, int]]:
    counts: dict[Element, int] = {}
    for x, k in raw:
        if isinstance(k, bool) or int(k) != k:
            raise ValueError(f"multiplicity must be an integer, got {k!r}")
        k = int(k)
        if k < 0:
            raise ValueError(f"negative multiplicity {k} for element {x!r}")
        key = space.element(x)
        counts[key] = counts.get(key, 0) + k
    e = space.basepoint
    return sorted((x, k) for x, k in counts.items() if k > 0 and x != e)


def canonicalize(space: GroundSpace, raw: Iterable[tuple[object, int]]) -> Multiset:
    """Merge duplicates, drop zero multiplicities and basepoint entries."""
    return Multiset(space, _merge(space, raw), _trusted=True)


def _same_space(a: Multiset, b: Multiset) -> GroundSpace:
    if a.space != b.space:
        raise SpaceMismatchError(f"multisets live over different ground spaces: {a.space!r} vs {b.space!r}")
    return a.space


def add(a: Multiset, b: Multiset) -> Multiset:
    space = _same_space(a, b)
    counts = a.as_dict()
    for x, k in b.entries:
        counts[x] = counts.get(x, 0) + k
    return Multiset(space, sorted(counts.items()), _trusted=True)


def padded_list(a: Multiset, n: int) -> list[Element]:
    """The elements of ``a`` followed by ``n - |a|`` copies of the basepoint."""
    if n < a.total_size:
        raise ValueError(f"padding length {n} is smaller than the multiset size {a.total_size}")
    return a.elements() + [a.space.basepoint] * (n - a.total_size)


def cost_matrix(a: Multiset, b: Multiset, n: int) -> np.ndarray:
    space = _same_space(a, b)
    c = space.pairwise(padded_list(a, n), padded_list(b, n))
    if _cost_hook is not None:
        c = _cost_hook(c)
    return c


def matching_distance_padded(a: Multiset, b: Multiset, n: int, size_cap: int = DEFAULT_SIZE_CAP) -> float:
    """Matching distance computed at an explicit padding length ``n``."""
    _same_space(a, b)
    need = max(a.total_size, b.total_size)
    if n < need:
        raise ValueError(f"padding length {n} < max multiset size {need}")
    if n > size_cap:
        raise SizeCapError(f"padded size {n} exceeds cap {size_cap}")
    if a.total_size == 0 and b.total_size == 0 and _cost_hook is None:
        return 0.0
    return solve_assignment(cost_matrix(a, b, n), size_cap=size_cap).total_cost


def matching_distance(a: Multiset, b: Multiset, size_cap: int = DEFAULT_SIZE_CAP) -> float:
    """Matching distance with the smallest sufficient padding ``max(|a|, |b|)``.

    The result does not depend on argument order: the pair is put in a
    fixed order before solving, so ``d(a, b)`` and ``d(b, a)`` are the same
    float, not merely equal up to rounding.
    """
    _same_space(a, b)
    if b.entries < a.entries:
        a, b = b, a
    n = max(a.total_size, b.total_size, 1)
    return matching_distance_padded(a, b, n, size_cap=size_cap)


def embed_point(space: GroundSpace, x) -> Multiset:
    """The singleton ``[x]``; the basepoint maps to the empty multiset."""
    return canonicalize(space, [(x, 1)])
