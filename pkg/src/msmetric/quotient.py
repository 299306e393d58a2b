"""Quotient of a ground space by a finite subset collapsed to one point."""
from __future__ import annotations

from dataclasses import dataclass

from msmetric.ground import Element, GroundSpace, dist_to_set

__all__ = ["QuotientSpace", "QuotientPoint", "COLLAPSED", "collapse", "quotient_distance", "uncollapsed_distance"]


@dataclass(frozen=True)
class QuotientPoint:
    """Either the collapsed class ``[H]`` (``representative is None``) or ``[x]`` with ``x`` outside ``H``."""

    representative: Element | None = None

    @property
    def collapsed(self) -> bool:
        return self.representative is None

    def __repr__(self) -> str:
        return "[H]" if self.collapsed else f"[{self.representative!r}]"


COLLAPSED = QuotientPoint()


@dataclass(frozen=True)
class QuotientSpace:
    base: GroundSpace
    H: frozenset

    def __init__(self, base: GroundSpace, H):
        keys = frozenset(base.element(h) for h in H)
        if not keys:
            raise ValueError("H: the collapsed subset must be nonempty")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "H", keys)

    def point(self, x) -> QuotientPoint:
        return collapse(self, x)

    def dist_to_H(self, x: Element) -> float:
        return dist_to_set(self.base, x, self.H)


def collapse(qs: QuotientSpace, x) -> QuotientPoint:
    """The quotient map; membership in ``H`` is by exact key."""
    key = qs.base.element(x)
    return COLLAPSED if key in qs.H else QuotientPoint(key)


def quotient_distance(qs: QuotientSpace, p: QuotientPoint, r: QuotientPoint) -> float:
    if p.collapsed and r.collapsed:
        return 0.0
    if p.collapsed:
        return qs.dist_to_H(r.representative)
    if r.collapsed:
        return qs.dist_to_H(p.representative)
    x, y = p.representative, r.representative
    if x in qs.H or y in qs.H:
        raise ValueError("quotient point representative lies in H; build points with collapse()")
    return min(qs.base.dist(x, y), qs.dist_to_H(x) + qs.dist_to_H(y))


def uncollapsed_distance(qs: QuotientSpace, x, y) -> float:
    """The same min formula evaluated on raw points of the base space.

    Only a pseudometric: two distinct points of ``H`` are at distance 0.
    """
    x, y = qs.base.element(x), qs.base.element(y)
    return min(qs.base.dist(x, y), qs.dist_to_H(x) + qs.dist_to_H(y))
