"""Computable approximations of l1-multisets (infinite multisets whose
distances to the basepoint are summable).

An l1-multiset is represented by a finite head plus a tail mass ``tau``,
a certified upper bound on the summed basepoint distances of every element
not in the head. The extended matching distance between two such objects
is then known up to an interval: the head distance plus or minus both tail
masses.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from msmetric.assignment import DEFAULT_SIZE_CAP
from msmetric.ground import GroundSpace
from msmetric.nmultiset import Multiset, SpaceMismatchError, canonicalize, matching_distance

__all__ = [
    "TruncatedL1Multiset",
    "DistanceInterval",
    "l1_distance",
    "truncate",
    "geometric_family",
    "cauchy_gap_table",
    "CauchyRow",
]

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class TruncatedL1Multiset:
    head: Multiset
    tail_mass: float = 0.0

    def __post_init__(self) -> None:
        tau = float(self.tail_mass)
        if not math.isfinite(tau) or tau < 0:
            raise ValueError(f"tail_mass must be finite and nonnegative, got {self.tail_mass!r}")
        object.__setattr__(self, "tail_mass", tau)

    @property
    def space(self) -> GroundSpace:
        return self.head.space

    def head_mass(self) -> float:
        norm = self.space.norm
        return math.fsum(norm(x) * k for x, k in self.head.entries)


@dataclass(frozen=True)
class DistanceInterval:
    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lower <= self.upper:
            raise ValueError(f"invalid interval [{self.lower}, {self.upper}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def __contains__(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def _rounding_guard(center: float, radius: float, n: int) -> float:
    # covers the rounding in n ground distances plus their sum
    return 4.0 * (n + 2) * _EPS * (center + radius)


def l1_distance(a: TruncatedL1Multiset, b: TruncatedL1Multiset, size_cap: int = DEFAULT_SIZE_CAP) -> DistanceInterval:
    """Certified enclosure of the extended matching distance.

    With ``m`` the matching distance of the heads, the true value lies in
    ``[m - tau_a - tau_b, m + tau_a + tau_b]``: each truncation moves its
    argument by at most its tail mass. Both ends are widened outward by a
    rounding guard of a few ulps.
    """
    if a.space != b.space:
        raise SpaceMismatchError("truncated multisets live over different ground spaces")
    m = matching_distance(a.head, b.head, size_cap=size_cap)
    radius = a.tail_mass + b.tail_mass
    if radius == 0.0:
        return DistanceInterval(m, m)
    guard = _rounding_guard(m, radius, max(a.head.total_size, b.head.total_size))
    return DistanceInterval(max(0.0, m - radius - guard), m + radius + guard)


def truncate(a: TruncatedL1Multiset, budget: int) -> TruncatedL1Multiset:
    """Keep the ``budget`` elements farthest from the basepoint.

    Ties go to the smaller key. The exact basepoint distances of the dropped
    elements are added to the tail mass.
    """
    if budget < 0:
        raise ValueError(f"budget must be nonnegative, got {budget}")
    if budget >= a.head.total_size:
        return a
    norm = a.space.norm
    ranked = sorted(((x, k) for x, k in a.head.entries), key=lambda xk: (-norm(xk[0]), xk[0]))
    kept: list[tuple[object, int]] = []
    dropped: list[float] = []
    room = budget
    for x, k in ranked:
        take = min(room, k)
        if take:
            kept.append((x, take))
            room -= take
        if k > take:
            dropped.append(norm(x) * (k - take))
    tau = math.fsum([a.tail_mass, *dropped])
    return TruncatedL1Multiset(canonicalize(a.space, kept), tau)


def geometric_family(count: int, space: GroundSpace | None = None) -> Multiset:
    """``[2^-1, ..., 2^-count]`` on the real line with basepoint 0."""
    space = space or GroundSpace.euclidean(1)
    return Multiset.from_elements(space, [(2.0**-k,) for k in range(1, count + 1)])


@dataclass(frozen=True)
class CauchyRow:
    m: int
    n: int
    gap: float
    bound: float


def cauchy_gap_table(prefix_count: int) -> list[CauchyRow]:
    """Pairwise distances between prefixes ``x_n = [2^-1, ..., 2^-n]``.

    Rows cover every ``prefix_count >= m > n >= 1``, ordered by ``(m, n)``.
    ``bound`` is the tail sum ``sum_{k=n+1}^{m} 2^-k``; the sequence is
    Cauchy but its limit is an infinite multiset.
    """
    if not 1 <= prefix_count <= 40:
        raise ValueError(f"prefix_count must be in 1..40, got {prefix_count}")
    space = GroundSpace.euclidean(1)
    prefixes = [geometric_family(k, space) for k in range(prefix_count + 1)]
    rows = []
    for m in range(2, prefix_count + 1):
        for n in range(1, m):
            gap = matching_distance(prefixes[m], prefixes[n])
            bound = math.fsum(2.0**-k for k in range(n + 1, m + 1))
            rows.append(CauchyRow(m, n, gap, bound))
    return rows
