"""JSON interchange for presentations and tensor tables.

The document grammar:

    {"n": 3,
     "indecomposables": ["a", "b"],
     "suspension": {"a": "b", "b": "a"},
     "angles": [[{"a": 1}, {"b": 1}, {}], ...],
     "tensor": {"unit": {"a": 1}, "table": {"a|a": {"a": 1}, "a|b": {}}}}

Objects are sparse {symbol: positive multiplicity} maps; the empty map is
the zero object.  Table keys join the two symbol names with "|", smaller
name first.  Serialization is canonical, so digests and reports are
byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import AngK0Error
from .presentations import Angle, ObjectVec, Presentation, Suspension
from .tensor import TensorPresentation

SCHEMA_VERSION = 1


class ParseError(AngK0Error):
    """The document is not structurally a presentation file."""


@dataclass(frozen=True)
class LoadedDocument:
    presentation: Presentation | None
    tensor: TensorPresentation | None
    violations: tuple[str, ...]
    has_tensor_block: bool


def _require(cond: bool, message: str):
    if not cond:
        raise ParseError(message)


def _is_int(x) -> bool:
    return type(x) is int


def load_path(path: str) -> LoadedDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_document(doc)


def parse_document(doc) -> LoadedDocument:
    """Parse a decoded JSON document.

    Structural problems (wrong JSON types) raise ParseError; semantic
    problems that are representable (unknown symbols, bad multiplicities,
    non-covering suspension) are returned as violations.
    """
    _require(isinstance(doc, dict), "document: expected an object")
    _require("n" in doc, "field n: missing")
    _require(_is_int(doc["n"]), "field n: expected an integer")
    _require("indecomposables" in doc, "field indecomposables: missing")
    indec = doc["indecomposables"]
    _require(
        isinstance(indec, list) and all(isinstance(x, str) for x in indec),
        "field indecomposables: expected a list of strings",
    )
    _require("suspension" in doc, "field suspension: missing")
    susp = doc["suspension"]
    _require(
        isinstance(susp, dict)
        and all(isinstance(k, str) and isinstance(v, str) for k, v in susp.items()),
        "field suspension: expected a string-to-string object",
    )
    angles_raw = doc.get("angles", [])
    _require(isinstance(angles_raw, list), "field angles: expected a list")
    for ai, angle in enumerate(angles_raw):
        _require(isinstance(angle, list), f"field angles[{ai}]: expected a list")
        for vi, vertex in enumerate(angle):
            _require(
                isinstance(vertex, dict)
                and all(isinstance(k, str) and _is_int(v) for k, v in vertex.items()),
                f"field angles[{ai}][{vi}]: expected a symbol-to-integer object",
            )
    tensor_raw = doc.get("tensor")
    has_tensor = tensor_raw is not None
    if has_tensor:
        _require(isinstance(tensor_raw, dict), "field tensor: expected an object")
        _require("unit" in tensor_raw, "field tensor.unit: missing")
        _require("table" in tensor_raw, "field tensor.table: missing")
        _require(
            isinstance(tensor_raw["unit"], dict)
            and all(
                isinstance(k, str) and _is_int(v) for k, v in tensor_raw["unit"].items()
            ),
            "field tensor.unit: expected a symbol-to-integer object",
        )
        _require(isinstance(tensor_raw["table"], dict), "field tensor.table: expected an object")
        for key, value in tensor_raw["table"].items():
            _require(
                isinstance(key, str)
                and isinstance(value, dict)
                and all(isinstance(k, str) and _is_int(v) for k, v in value.items()),
                f"field tensor.table[{key!r}]: expected a symbol-to-integer object",
            )

    violations: list[str] = []
    names = tuple(indec)
    index = {name: i for i, name in enumerate(names)}
    if len(index) != len(names):
        violations.append("indecomposable names are not distinct")

    def resolve_object(raw: dict, where: str) -> ObjectVec | None:
        vec = [0] * len(names)
        ok = True
        for name, mult in raw.items():
            if name not in index:
                violations.append(f"{where}: unknown symbol {name!r}")
                ok = False
                continue
            if mult < 1:
                violations.append(f"{where}: multiplicity for {name!r} must be positive")
                ok = False
                continue
            vec[index[name]] = mult
        return tuple(vec) if ok else None

    susp_images = [None] * len(names)
    for key, value in susp.items():
        if key not in index:
            violations.append(f"suspension: unknown symbol {key!r}")
            continue
        if value not in index:
            violations.append(f"suspension: unknown image symbol {value!r}")
            continue
        susp_images[index[key]] = index[value]
    for name in names:
        if name in index and susp_images[index[name]] is None:
            if name not in susp:
                violations.append(f"suspension: missing symbol {name!r}")

    angle_objs = []
    for ai, angle in enumerate(angles_raw):
        vertices = []
        for vi, vertex in enumerate(angle):
            obj = resolve_object(vertex, f"angles[{ai}][{vi}]")
            vertices.append(obj)
        angle_objs.append(vertices)

    tensor_table = {}
    tensor_unit = None
    if has_tensor:
        tensor_unit = resolve_object(tensor_raw["unit"], "tensor.unit")
        seen_pairs = set()
        for key, value in tensor_raw["table"].items():
            parts = key.split("|")
            if len(parts) != 2:
                violations.append(f"tensor.table key {key!r}: expected 'x|y'")
                continue
            left, right = parts
            if left not in index or right not in index:
                violations.append(f"tensor.table key {key!r}: unknown symbol")
                continue
            if min(left, right) != left:
                violations.append(
                    f"tensor.table key {key!r}: smaller name must come first"
                )
                continue
            pair = (index[left], index[right])
            if pair in seen_pairs:
                violations.append(f"tensor.table key {key!r}: duplicate pair")
                continue
            seen_pairs.add(pair)
            obj = resolve_object(value, f"tensor.table[{key!r}]")
            if obj is not None:
                tensor_table[pair] = obj
        for i in range(len(names)):
            for j in range(i, len(names)):
                if (i, j) not in seen_pairs and (j, i) not in seen_pairs:
                    violations.append(
                        f"tensor.table: missing entry for "
                        f"{names[i]!r}, {names[j]!r}"
                    )

    if violations:
        return LoadedDocument(
            presentation=None,
            tensor=None,
            violations=tuple(violations),
            has_tensor_block=has_tensor,
        )

    presentation = Presentation(
        n=doc["n"],
        indec_names=names,
        suspension=Suspension(tuple(susp_images)),
        angles=tuple(Angle(tuple(vs)) for vs in angle_objs),
    )
    tensor = None
    if has_tensor:
        tensor = TensorPresentation(presentation, tensor_table, tensor_unit)
    return LoadedDocument(
        presentation=presentation,
        tensor=tensor,
        violations=(),
        has_tensor_block=has_tensor,
    )


def _object_json(names, vec) -> dict:
    return {names[i]: vec[i] for i in range(len(names)) if vec[i]}


def serialize(p: Presentation, tensor: TensorPresentation | None = None) -> dict:
    """Canonical document for a presentation (round-trips through parse)."""
    doc = {
        "n": p.n,
        "indecomposables": list(p.indec_names),
        "suspension": {
            name: p.indec_names[p.suspension.images[i]]
            for i, name in enumerate(p.indec_names)
        },
        "angles": [
            [_object_json(p.indec_names, v) for v in angle.vertices]
            for angle in p.angles
        ],
    }
    if tensor is not None:
        table = {}
        for i in range(p.rank):
            for j in range(i, p.rank):
                a, b = sorted((p.indec_names[i], p.indec_names[j]))
                table[f"{a}|{b}"] = _object_json(p.indec_names, tensor.product_basis(i, j))
        doc["tensor"] = {
            "unit": _object_json(p.indec_names, tensor.unit),
            "table": table,
        }
    return doc


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def digest(p: Presentation, tensor: TensorPresentation | None = None) -> str:
    return hashlib.sha256(canonical_json(serialize(p, tensor)).encode("utf-8")).hexdigest()


def parse_object_literal(text: str, p: Presentation) -> ObjectVec:
    """Parse a {symbol: multiplicity} literal used by CLI flags."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"object literal is not valid JSON: {exc.msg}") from exc
    if not isinstance(raw, dict) or not all(
        isinstance(k, str) and _is_int(v) for k, v in raw.items()
    ):
        raise ValueError("object literal must map symbol names to integers")
    vec = [0] * p.rank
    for name, mult in raw.items():
        if name not in p.indec_names:
            raise ValueError(f"unknown symbol {name!r}")
        if mult < 0:
            raise ValueError(f"multiplicity for {name!r} must be nonnegative")
        vec[p.indec_names.index(name)] = mult
    return tuple(vec)
