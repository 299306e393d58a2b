"""The free abelian group on a pointed metric space.

A :class:`SignedMultiset` is a finite formal sum with nonzero integer
coefficients. Its positive and negative parts are ordinary multisets with
disjoint supports, and the group distance reduces to the matching distance
between ``x+ + y-`` and ``y+ + x-``.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from msmetric.assignment import DEFAULT_SIZE_CAP
from msmetric.ground import Element, GroundSpace
from msmetric.nmultiset import Multiset, SpaceMismatchError, add, matching_distance

__all__ = [
    "SignedMultiset",
    "pos_part",
    "neg_part",
    "group_add",
    "group_neg",
    "group_sub",
    "group_distance",
    "distance_from_parts",
    "embed_multiset",
]


class SignedMultiset:
    """Immutable canonical element -> nonzero integer coefficient map."""

    __slots__ = ("space", "entries", "_hash")

    def __init__(self, space: GroundSpace, entries: Iterable[tuple[object, int]] = ()):
        counts: dict[Element, int] = {}
        for x, k in entries:
            if isinstance(k, bool) or int(k) != k:
                raise ValueError(f"coefficient must be an integer, got {k!r}")
            key = space.element(x)
            counts[key] = counts.get(key, 0) + int(k)
        e = space.basepoint
        self.space = space
        self.entries: tuple[tuple[Element, int], ...] = tuple(
            sorted((x, k) for x, k in counts.items() if k != 0 and x != e)
        )
        self._hash = None

    @classmethod
    def zero(cls, space: GroundSpace) -> SignedMultiset:
        return cls(space)

    def as_dict(self) -> dict[Element, int]:
        return dict(self.entries)

    def __iter__(self) -> Iterator[tuple[Element, int]]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedMultiset):
            return NotImplemented
        return self.space == other.space and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.space, self.entries))
        return self._hash

    def __add__(self, other: SignedMultiset) -> SignedMultiset:
        return group_add(self, other)

    def __sub__(self, other: SignedMultiset) -> SignedMultiset:
        return group_sub(self, other)

    def __neg__(self) -> SignedMultiset:
        return group_neg(self)

    def __repr__(self) -> str:
        body = ", ".join(f"{x!r}: {k:+d}" for x, k in self.entries)
        return f"SignedMultiset({{{body}}})"


def pos_part(x: SignedMultiset) -> Multiset:
    return Multiset(x.space, [(p, k) for p, k in x.entries if k > 0], _trusted=True)


def neg_part(x: SignedMultiset) -> Multiset:
    return Multiset(x.space, [(p, -k) for p, k in x.entries if k < 0], _trusted=True)


def _check(x: SignedMultiset, y: SignedMultiset) -> GroundSpace:
    if x.space != y.space:
        raise SpaceMismatchError(f"signed multisets live over different ground spaces: {x.space!r} vs {y.space!r}")
    return x.space


def group_add(x: SignedMultiset, y: SignedMultiset) -> SignedMultiset:
    return SignedMultiset(_check(x, y), x.entries + y.entries)


def group_neg(x: SignedMultiset) -> SignedMultiset:
    return SignedMultiset(x.space, [(p, -k) for p, k in x.entries])


def group_sub(x: SignedMultiset, y: SignedMultiset) -> SignedMultiset:
    return group_add(x, group_neg(y))


def distance_from_parts(
    x_pos: Multiset, x_neg: Multiset, y_pos: Multiset, y_neg: Multiset, size_cap: int = DEFAULT_SIZE_CAP
) -> float:
    """Group distance from an arbitrary (not necessarily disjoint) decomposition.

    ``x = x_pos - x_neg`` and ``y = y_pos - y_neg``. Any decomposition gives
    the same value; the canonical one is just the cheapest.
    """
    return matching_distance(add(x_pos, y_neg), add(y_pos, x_neg), size_cap=size_cap)


def group_distance(x: SignedMultiset, y: SignedMultiset, size_cap: int = DEFAULT_SIZE_CAP) -> float:
    _check(x, y)
    return distance_from_parts(pos_part(x), neg_part(x), pos_part(y), neg_part(y), size_cap=size_cap)


def embed_multiset(a: Multiset) -> SignedMultiset:
    """Inclusion of the monoid into the group."""
    return SignedMultiset(a.space, a.entries)
