"""Pointed ground metric spaces.

A :class:`GroundSpace` bundles a distance rule, a basepoint and the key
discipline used for elements. Elements are plain Python values:

* ``euclidean`` / ``l1``: tuples of finite floats of length ``dimension``
* ``discrete`` / ``finite_matrix``: label strings

Keys compare by exact equality and sort with the usual ordering of tuples
or strings, which is what the multiset types use for canonical order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "Element",
    "GroundSpace",
    "InvalidSpaceError",
    "InvalidElementError",
    "MetricViolation",
    "KINDS",
    "dist",
    "dist_to_set",
    "validate_finite_metric",
]

Element = Union[tuple, str]

KINDS = ("euclidean", "l1", "discrete", "finite_matrix")


class InvalidSpaceError(ValueError):
    pass


class InvalidElementError(ValueError):
    pass


@dataclass(frozen=True)
class MetricViolation:
    """First metric axiom a matrix fails, with the offending indices."""

    axiom: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.axiom} violated at {self.indices}: {self.detail}"


def validate_finite_metric(matrix) -> MetricViolation | None:
    """Return ``None`` if ``matrix`` is a metric, else the first violation.

    Checks, in order: square shape, finite entries, zero diagonal, symmetry,
    strictly positive off-diagonal entries, and every triangle inequality
    ``D[i,k] <= D[i,j] + D[j,k]``. Comparisons are exact.
    """
    d = np.asarray(matrix, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] == 0:
        return MetricViolation("shape", tuple(d.shape), "matrix must be square and nonempty")
    n = d.shape[0]
    bad = np.argwhere(~np.isfinite(d))
    if len(bad):
        i, j = map(int, bad[0])
        return MetricViolation("finiteness", (i, j), f"entry {d[i, j]!r} is not finite")
    for i in range(n):
        if d[i, i] != 0.0:
            return MetricViolation("zero diagonal", (i, i), f"d[{i},{i}] = {d[i, i]!r}")
    bad = np.argwhere(d != d.T)
    if len(bad):
        i, j = map(int, bad[0])
        return MetricViolation("symmetry", (i, j), f"d[{i},{j}] = {d[i, j]!r} != d[{j},{i}] = {d[j, i]!r}")
    off = ~np.eye(n, dtype=bool)
    bad = np.argwhere(off & (d <= 0.0))
    if len(bad):
        i, j = map(int, bad[0])
        return MetricViolation("positivity", (i, j), f"d[{i},{j}] = {d[i, j]!r} for distinct points")
    for j in range(n):
        # via[i, k] = d[i, j] + d[j, k]
        via = d[:, j, None] + d[None, j, :]
        bad = np.argwhere(d > via)
        if len(bad):
            i, k = map(int, bad[0])
            return MetricViolation(
                "triangle",
                (i, j, k),
                f"d[{i},{k}] = {d[i, k]!r} > d[{i},{j}] + d[{j},{k}] = {via[i, k]!r}",
            )
    return None


@dataclass(frozen=True)
class GroundSpace:
    """A pointed metric space ``(X, d, e)``.

    Use the ``euclidean``, ``l1``, ``discrete`` and ``finite_matrix``
    constructors rather than calling this directly. Instances are immutable
    and compare by value, so two spaces loaded from the same description are
    interchangeable.
    """

    metric_kind: str
    basepoint: Element
    dimension: int = 0
    matrix: tuple[tuple[float, ...], ...] | None = None
    labels: tuple[str, ...] | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _array: np.ndarray = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        kind = self.metric_kind
        if kind not in KINDS:
            raise InvalidSpaceError(f"kind: unknown metric kind {kind!r}; expected one of {KINDS}")
        if kind in ("euclidean", "l1"):
            if not isinstance(self.dimension, int) or self.dimension < 1:
                raise InvalidSpaceError(f"dimension: must be a positive integer, got {self.dimension!r}")
        if kind == "finite_matrix":
            if self.matrix is None or self.labels is None:
                raise InvalidSpaceError("matrix: finite_matrix spaces need both matrix and labels")
            violation = validate_finite_metric(self.matrix)
            if violation is not None:
                raise InvalidSpaceError(f"matrix: {violation}")
            if len(self.labels) != len(self.matrix):
                raise InvalidSpaceError(
                    f"labels: {len(self.labels)} labels for a {len(self.matrix)}x{len(self.matrix)} matrix"
                )
            if len(set(self.labels)) != len(self.labels):
                raise InvalidSpaceError("labels: duplicate labels")
            if not all(isinstance(lab, str) for lab in self.labels):
                raise InvalidSpaceError("labels: must be strings")
            object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
            object.__setattr__(self, "_array", np.asarray(self.matrix, dtype=float))
        # normalizes and validates; raises on an unusable basepoint
        object.__setattr__(self, "basepoint", self.element(self.basepoint))

    # -- constructors -------------------------------------------------------

    @classmethod
    def euclidean(cls, dimension: int = 1, basepoint=None) -> GroundSpace:
        if basepoint is None:
            basepoint = (0.0,) * dimension
        return cls("euclidean", basepoint, dimension=dimension)

    @classmethod
    def l1(cls, dimension: int = 1, basepoint=None) -> GroundSpace:
        if basepoint is None:
            basepoint = (0.0,) * dimension
        return cls("l1", basepoint, dimension=dimension)

    @classmethod
    def discrete(cls, basepoint: str = "e") -> GroundSpace:
        return cls("discrete", basepoint)

    @classmethod
    def finite_matrix(cls, matrix, labels: Sequence[str], basepoint: str) -> GroundSpace:
        rows = tuple(tuple(float(v) for v in row) for row in matrix)
        return cls("finite_matrix", basepoint, matrix=rows, labels=tuple(labels))

    # -- elements -----------------------------------------------------------

    @property
    def is_coordinate(self) -> bool:
        return self.metric_kind in ("euclidean", "l1")

    def element(self, raw) -> Element:
        """Normalize ``raw`` into this space's key form, validating it.

        Coordinate spaces accept a sequence of numbers (or a bare number when
        ``dimension == 1``) and return a tuple of floats.
        """
        if self.is_coordinate:
            if isinstance(raw, (int, float)) and not isinstance(raw, bool):
                raw = (raw,)
            if isinstance(raw, (str, bytes)) or not isinstance(raw, Iterable):
                raise InvalidElementError(f"expected a coordinate sequence, got {raw!r}")
            coords = tuple(float(c) for c in raw)
            if len(coords) != self.dimension:
                raise InvalidElementError(
                    f"dimension mismatch: element {raw!r} has {len(coords)} coordinates, space has {self.dimension}"
                )
            if not all(math.isfinite(c) for c in coords):
                raise InvalidElementError(f"non-finite coordinate in {raw!r}")
            # -0.0 == 0.0 but they must share one canonical key
            return tuple(c + 0.0 for c in coords)
        if not isinstance(raw, str):
            raise InvalidElementError(f"expected a label string, got {raw!r}")
        if self.metric_kind == "finite_matrix" and raw not in self._index:
            raise InvalidElementError(f"label {raw!r} not in matrix index")
        return raw

    def contains(self, x) -> bool:
        try:
            self.element(x)
        except InvalidElementError:
            return False
        return True

    # -- distances ----------------------------------------------------------

    def dist(self, p: Element, q: Element) -> float:
        kind = self.metric_kind
        if kind == "discrete":
            self.element(p)
            self.element(q)
            return 0.0 if p == q else 1.0
        if kind == "finite_matrix":
            return float(self._array[self._index_of(p), self._index_of(q)])
        self._check_coords(p)
        self._check_coords(q)
        if self.dimension == 1:
            return abs(p[0] - q[0])
        if kind == "l1":
            return math.fsum(abs(a - b) for a, b in zip(p, q))
        return math.hypot(*(a - b for a, b in zip(p, q)))

    def pairwise(self, xs: Sequence[Element], ys: Sequence[Element]) -> np.ndarray:
        """Matrix ``D[i, j] = dist(xs[i], ys[j])``, vectorized where possible."""
        if not xs or not ys:
            return np.zeros((len(xs), len(ys)))
        kind = self.metric_kind
        if kind == "finite_matrix":
            ix = np.fromiter((self._index_of(x) for x in xs), dtype=np.intp, count=len(xs))
            iy = np.fromiter((self._index_of(y) for y in ys), dtype=np.intp, count=len(ys))
            return self._array[np.ix_(ix, iy)]
        if kind == "discrete":
            return np.array([[0.0 if x == y else 1.0 for y in ys] for x in xs])
        a = np.asarray(xs, dtype=float).reshape(len(xs), self.dimension)
        b = np.asarray(ys, dtype=float).reshape(len(ys), self.dimension)
        diff = a[:, None, :] - b[None, :, :]
        if self.dimension == 1:
            return np.abs(diff[:, :, 0])
        if kind == "l1":
            return np.abs(diff).sum(axis=2)
        # scale first so tiny differences do not underflow to a zero distance
        scale = np.abs(diff).max(axis=2)
        safe = np.where(scale > 0, scale, 1.0)
        unit = diff / safe[:, :, None]
        return scale * np.sqrt((unit * unit).sum(axis=2))

    def norm(self, x: Element) -> float:
        """Distance from ``x`` to the basepoint."""
        return self.dist(x, self.basepoint)

    def _index_of(self, label) -> int:
        try:
            return self._index[label]
        except (KeyError, TypeError):
            raise InvalidElementError(f"label {label!r} not in matrix index") from None

    def _check_coords(self, p) -> None:
        if not isinstance(p, tuple) or len(p) != self.dimension:
            raise InvalidElementError(f"dimension mismatch: {p!r} is not a {self.dimension}-tuple")

    def to_json(self) -> dict:
        out: dict = {"kind": self.metric_kind}
        if self.is_coordinate:
            out["dimension"] = self.dimension
            out["basepoint"] = list(self.basepoint)
        else:
            out["basepoint"] = self.basepoint
        if self.metric_kind == "finite_matrix":
            out["matrix"] = [list(row) for row in self.matrix]
            out["labels"] = list(self.labels)
        return out


def dist(space: GroundSpace, p: Element, q: Element) -> float:
    return space.dist(p, q)


def dist_to_set(space: GroundSpace, p: Element, H: Iterable[Element]) -> float:
    """``min_{h in H} d(p, h)`` for a finite nonempty ``H``."""
    best = math.inf
    empty = True
    for h in H:
        empty = False
        d = space.dist(p, h)
        if d < best:
            best = d
    if empty:
        raise ValueError("dist_to_set: H must be nonempty")
    return best
