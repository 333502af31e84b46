import json

import pytest

from zgraded import serialize
from zgraded.constructions import (
    clifford,
    clifford_complex,
    even_twisted_subalgebra,
    m2_clifford_basis,
    matrix_algebra,
    quaternions,
    twisted_group_algebra,
)

CATALOGUE = {
    "quaternions": quaternions,
    "cl03": lambda: clifford(0, 3),
    "cl21": lambda: clifford(2, 1),
    "cl3c": lambda: clifford_complex(3),
    "twisted3": lambda: twisted_group_algebra(3),
    "twisted2c": lambda: twisted_group_algebra(2, field="gaussian"),
    "even4": lambda: even_twisted_subalgebra(4),
    "m2": lambda: matrix_algebra(2, m2_clifford_basis()[0], labels=m2_clifford_basis()[1]),
}


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_round_trip(name):
    A = CATALOGUE[name]()
    text = serialize.dumps(A)
    B = serialize.loads(text)
    assert serialize.dumps(B) == text
    assert B.structure() == A.structure()
    assert B.labels == A.labels and B.degrees == A.degrees and B.unit == A.unit


def test_document_schema():
    doc = serialize.to_document(quaternions())
    assert doc["field"] == "rational" and doc["n"] == 3
    assert doc["basis"][1] == {"label": "i", "degree": [0, 1, 1]}
    assert [1, 2, 3, {"num": 1, "den": 1}] in doc["structure"]
    gdoc = serialize.to_document(clifford_complex(1))
    assert gdoc["unit"][0] == {"re": {"num": 1, "den": 1}, "im": {"num": 0, "den": 1}}
    assert serialize.to_document(twisted_group_algebra(2))["cocycle"] == [[0, 0], [1, 0]]
    mdoc = serialize.to_document(CATALOGUE["m2"]())
    assert mdoc["n"] is None and mdoc["basis"][0]["degree"] is None


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("unit"),
    lambda d: d.update(field="real"),
    lambda d: d["basis"][1].update(degree=[0, 1]),
    lambda d: d["structure"].append([9, 0, 0, {"num": 1, "den": 1}]),
    lambda d: d["structure"][0].__setitem__(3, {"num": 1, "den": 0}),
    lambda d: d.update(unit=[{"num": 0, "den": 1}] * 4),
])
def test_rejects_malformed(mutate):
    doc = serialize.to_document(quaternions())
    mutate(doc)
    with pytest.raises(ValueError):
        serialize.from_document(json.loads(json.dumps(doc)))
