"""JSON point-set files.

A file holds one object::

    {"field": {"prime": 101} | "rational",
     "points": [["1", "0", "-3/2"], ...]}

Coordinates are decimal integers or ``num/den`` strings.  Points are
normalized on load and duplicates are rejected with their index.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .linalg import FieldSpec
from .points import DuplicatePointError, PointSet


class PointFileError(ValueError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def _parse_field(spec) -> FieldSpec:
    if spec == "rational":
        return FieldSpec.rational()
    if isinstance(spec, dict) and set(spec) == {"prime"} and isinstance(spec["prime"], int):
        try:
            return FieldSpec.prime(spec["prime"])
        except ValueError as exc:
            raise PointFileError(str(exc)) from None
    raise PointFileError(f"bad field specification {spec!r}")


def _parse_coord(text, i: int) -> Fraction:
    if not isinstance(text, str):
        raise PointFileError(f"point {i}: coordinates must be strings, got {text!r}", i)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise PointFileError(f"point {i}: cannot parse coordinate {text!r}", i) from None


def parse_point_set(doc) -> PointSet:
    if not isinstance(doc, dict) or "field" not in doc or "points" not in doc:
        raise PointFileError("expected an object with 'field' and 'points'")
    field = _parse_field(doc["field"])
    raw = doc["points"]
    if not isinstance(raw, list):
        raise PointFileError("'points' must be a list")
    coords = []
    for i, pt in enumerate(raw):
        if not isinstance(pt, list) or len(pt) != 3:
            raise PointFileError(f"point {i}: expected 3 coordinates", i)
        coords.append([_parse_coord(x, i) for x in pt])
    try:
        return PointSet(field, coords)
    except DuplicatePointError as exc:
        raise PointFileError(str(exc), exc.index) from None
    except (ValueError, ZeroDivisionError) as exc:
        raise PointFileError(str(exc)) from None


def load_point_set(path) -> PointSet:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise PointFileError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise PointFileError(f"{path}: not valid JSON ({exc})") from None
    return parse_point_set(doc)


def point_set_to_doc(Z: PointSet) -> dict:
    field = {"prime": Z.field.p} if Z.field.is_prime else "rational"
    return {"field": field, "points": [[str(x) for x in pt] for pt in Z.points]}


def dump_point_set(Z: PointSet, path) -> None:
    Path(path).write_text(json.dumps(point_set_to_doc(Z), indent=2) + "\n")
