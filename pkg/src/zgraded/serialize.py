"""JSON interchange format for algebras.

Layout::

    {"field": "rational" | "gaussian",
     "n": int | null,
     "basis": [{"label": str, "degree": [0/1, ...] | null}, ...],
     "unit": [scalar, ...],
     "structure": [[i, j, k, scalar], ...],
     "cocycle": [[0/1, ...], ...]}          # optional bilinear form

Scalars are ``{"num": int, "den": int}`` or ``{"re": {...}, "im": {...}}``.
Degree arrays list coordinate 1 first.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cocycle import BilinearFormZ2
from .graded_algebra import GradedAlgebra
from .scalars import FIELDS, from_json, to_json
from .z2group import GroupElement


def to_document(A: GradedAlgebra) -> dict:
    basis = []
    for k, label in enumerate(A.labels):
        degree = list(A.degree(k).to_tuple()) if A.graded else None
        basis.append({"label": label, "degree": degree})
    doc = {
        "field": A.field,
        "n": A.n,
        "basis": basis,
        "unit": [to_json(c, A.field) for c in A.unit],
        "structure": [[i, j, k, to_json(c, A.field)] for i, j, k, c in A.structure()],
    }
    if A.cocycle_form is not None:
        doc["cocycle"] = A.cocycle_form.matrix()
    return doc


def from_document(doc) -> GradedAlgebra:
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    missing = {"field", "n", "basis", "unit", "structure"} - set(doc)
    if missing:
        raise ValueError(f"document lacks keys {sorted(missing)}")
    field = doc["field"]
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    n = doc["n"]
    basis = doc["basis"]
    if not isinstance(basis, list) or not basis:
        raise ValueError("basis must be a non-empty array")
    labels = []
    degrees = []
    for entry in basis:
        if not isinstance(entry, dict) or not isinstance(entry.get("label"), str):
            raise ValueError(f"bad basis entry {entry!r}")
        labels.append(entry["label"])
        deg = entry.get("degree")
        if n is None:
            if deg is not None:
                raise ValueError("ungraded document carries a degree")
        else:
            if not isinstance(deg, list) or len(deg) != n:
                raise ValueError(f"degree of {entry['label']!r} must be {n} bits")
            degrees.append(GroupElement.from_tuple(deg))
    structure = []
    for row in doc["structure"]:
        if not isinstance(row, list) or len(row) != 4 or not all(isinstance(x, int) for x in row[:3]):
            raise ValueError(f"bad structure entry {row!r}")
        structure.append((row[0], row[1], row[2], from_json(row[3], field)))
    unit = [from_json(c, field) for c in doc["unit"]]
    form = BilinearFormZ2.from_matrix(doc["cocycle"]) if doc.get("cocycle") is not None else None
    return GradedAlgebra(field, labels, structure, unit, n, degrees if n is not None else None, form)


def _block(items) -> str:
    return "[\n" + ",\n".join("  " + json.dumps(x) for x in items) + "\n ]"


def dumps(A: GradedAlgebra) -> str:
    """Deterministic text: one line per basis entry and per structure constant."""
    doc = to_document(A)
    parts = []
    for key, value in doc.items():
        if key in ("basis", "structure", "cocycle"):
            body = _block(value)
        else:
            body = json.dumps(value)
        parts.append(f" {json.dumps(key)}: {body}")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def loads(text: str) -> GradedAlgebra:
    return from_document(json.loads(text))


def save(A: GradedAlgebra, path) -> None:
    Path(path).write_text(dumps(A))


def load(path) -> GradedAlgebra:
    return loads(Path(path).read_text())
