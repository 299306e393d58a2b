"""JSON wire formats for spaces, multisets and quotient descriptions.

Loaders raise :class:`SchemaError` carrying the dotted path of the
offending field, so the CLI can report exactly what is wrong.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from msmetric.ground import KINDS, GroundSpace, InvalidElementError, InvalidSpaceError
from msmetric.l1 import TruncatedL1Multiset
from msmetric.nmultiset import Multiset, canonicalize
from msmetric.quotient import QuotientSpace
from msmetric.zgroup import SignedMultiset

__all__ = [
    "SchemaError",
    "read_json",
    "space_from_json",
    "space_to_json",
    "element_to_json",
    "multiset_from_json",
    "multiset_to_json",
    "signed_from_json",
    "signed_to_json",
    "truncated_from_json",
    "truncated_to_json",
    "quotient_from_json",
    "element_from_json",
]


class SchemaError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def read_json(path: str | Path, field: str = "file") -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(field, f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(field, f"malformed JSON in {path}: {exc}") from None


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise SchemaError(where, "expected a JSON object")
    if key not in obj:
        raise SchemaError(f"{where}.{key}" if where else key, "missing field")
    return obj[key]


def space_from_json(obj: Any, where: str = "space") -> GroundSpace:
    kind = _require(obj, "kind", where)
    if kind not in KINDS:
        raise SchemaError(f"{where}.kind", f"unknown kind {kind!r}")
    try:
        if kind in ("euclidean", "l1"):
            dim = _require(obj, "dimension", where)
            if not isinstance(dim, int) or isinstance(dim, bool):
                raise SchemaError(f"{where}.dimension", f"expected a positive integer, got {dim!r}")
            base = obj.get("basepoint")
            return GroundSpace(kind, base if base is not None else (0.0,) * dim, dimension=dim)
        base = _require(obj, "basepoint", where)
        if kind == "discrete":
            return GroundSpace.discrete(base)
        matrix = _require(obj, "matrix", where)
        labels = _require(obj, "labels", where)
        if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
            raise SchemaError(f"{where}.matrix", "expected a list of rows")
        if not isinstance(labels, list):
            raise SchemaError(f"{where}.labels", "expected a list of strings")
        return GroundSpace.finite_matrix(matrix, labels, base)
    except InvalidSpaceError as exc:
        field = str(exc).split(":", 1)[0]
        raise SchemaError(f"{where}.{field}", str(exc).split(":", 1)[1].strip()) from None
    except InvalidElementError as exc:
        raise SchemaError(f"{where}.basepoint", str(exc)) from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(where, str(exc)) from None


def space_to_json(space: GroundSpace) -> dict:
    return space.to_json()


def element_to_json(x) -> Any:
    return list(x) if isinstance(x, tuple) else x


def element_from_json(space: GroundSpace, raw: Any, where: str = "element"):
    try:
        return space.element(raw)
    except (InvalidElementError, TypeError, ValueError) as exc:
        raise SchemaError(where, str(exc)) from None


def _entries(obj: Any, where: str, count_key: str) -> list[tuple[Any, Any]]:
    entries = _require(obj, "entries", where)
    if not isinstance(entries, list):
        raise SchemaError(f"{where}.entries", "expected a list")
    out = []
    for i, entry in enumerate(entries):
        at = f"{where}.entries[{i}]"
        out.append((_require(entry, "element", at), _require(entry, count_key, at)))
    return out


def multiset_from_json(space: GroundSpace, obj: Any, where: str = "multiset") -> Multiset:
    raw = []
    for i, (x, k) in enumerate(_entries(obj, where, "multiplicity")):
        at = f"{where}.entries[{i}]"
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise SchemaError(f"{at}.multiplicity", f"expected a nonnegative integer, got {k!r}")
        raw.append((element_from_json(space, x, f"{at}.element"), k))
    return canonicalize(space, raw)


def multiset_to_json(a: Multiset) -> dict:
    return {"entries": [{"element": element_to_json(x), "multiplicity": k} for x, k in a.entries]}


def signed_from_json(space: GroundSpace, obj: Any, where: str = "signed") -> SignedMultiset:
    raw = []
    for i, (x, k) in enumerate(_entries(obj, where, "coefficient")):
        at = f"{where}.entries[{i}]"
        if not isinstance(k, int) or isinstance(k, bool) or k == 0:
            raise SchemaError(f"{at}.coefficient", f"expected a nonzero integer, got {k!r}")
        raw.append((element_from_json(space, x, f"{at}.element"), k))
    return SignedMultiset(space, raw)


def signed_to_json(x: SignedMultiset) -> dict:
    return {"entries": [{"element": element_to_json(p), "coefficient": k} for p, k in x.entries]}


def truncated_from_json(space: GroundSpace, obj: Any, where: str = "l1multiset") -> TruncatedL1Multiset:
    head = multiset_from_json(space, _require(obj, "head", where), f"{where}.head")
    tau = _require(obj, "tail_mass", where)
    if isinstance(tau, bool) or not isinstance(tau, (int, float)):
        raise SchemaError(f"{where}.tail_mass", f"expected a number, got {tau!r}")
    try:
        return TruncatedL1Multiset(head, tau)
    except ValueError as exc:
        raise SchemaError(f"{where}.tail_mass", str(exc)) from None


def truncated_to_json(a: TruncatedL1Multiset) -> dict:
    return {"head": multiset_to_json(a.head), "tail_mass": a.tail_mass}


def quotient_from_json(obj: Any, where: str = "quotient") -> QuotientSpace:
    space = space_from_json(_require(obj, "space", where), f"{where}.space")
    H = _require(obj, "H", where)
    if not isinstance(H, list) or not H:
        raise SchemaError(f"{where}.H", "expected a nonempty list of elements")
    keys = [element_from_json(space, h, f"{where}.H[{i}]") for i, h in enumerate(H)]
    return QuotientSpace(space, keys)
