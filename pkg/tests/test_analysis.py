import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import from_sympy, left_mult_matrix, span_rank, to_sympy
from zgraded import serialize
from zgraded._common import Unsupported
from zgraded.analysis import (
    INDETERMINATE,
    NOT_SIMPLE,
    SIMPLE,
    Subspace,
    center,
    factor_polynomial,
    ideal_closure,
    is_graded_simple,
    is_simple,
    minimal_polynomial,
    poly_eval,
    radical,
    trace_form,
)
from zgraded.constructions import (
    clifford,
    clifford_complex,
    even_twisted_subalgebra,
    matrix_algebra,
    matrix_units,
    quaternions,
    twisted_group_algebra,
)
from zgraded.graded_algebra import GradedAlgebra

H = quaternions()

DUAL_NUMBERS_DOC = """{
 "field": "rational",
 "n": 1,
 "basis": [{"label": "1", "degree": [0]}, {"label": "d", "degree": [1]}],
 "unit": [{"num": 1, "den": 1}, {"num": 0, "den": 1}],
 "structure": [[0, 0, 0, {"num": 1, "den": 1}], [0, 1, 1, {"num": 1, "den": 1}], [1, 0, 1, {"num": 1, "den": 1}]]
}"""


@pytest.fixture
def dual():
    return serialize.loads(DUAL_NUMBERS_DOC)


def test_ideal_closure_examples():
    assert ideal_closure(H, [H["i"]]).dim == 4
    # oracle: -i is an inverse of i
    assert H["i"] * (-H["i"]) == H.one()
    C = clifford(1, 0)
    x = C.one() + C["a1"]
    assert x * x == 2 * x and C["a1"] * x == x
    S = ideal_closure(C, [x])
    assert S.dim == 1 and S.contains(x)
    assert ideal_closure(H, [H.zero()]).dim == 0


ALGEBRAS = [H, clifford(1, 0), clifford(0, 3), clifford(2, 1), clifford(1, 2), even_twisted_subalgebra(4)]


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_ideal_closure_properties(data):
    A = data.draw(st.sampled_from(ALGEBRAS))
    vec = st.lists(st.integers(-2, 2), min_size=A.dim, max_size=A.dim)
    gens = [A.element(v) for v in data.draw(st.lists(vec, min_size=1, max_size=2))]
    extra = A.element(data.draw(vec))
    S = ideal_closure(A, gens)
    assert all(S.contains(g) for g in gens)
    assert S.is_ideal()
    assert ideal_closure(A, S.elements()) == S
    bigger = ideal_closure(A, gens + [extra])
    assert all(bigger.contains(r) for r in S.elements())


def _center_oracle(A):
    rows = []
    for i in range(A.dim):
        b = A.basis_vector(i)
        for k in range(A.dim):
            rows.append([to_sympy(A.mul_vec(A.basis_vector(j), b)[k] - A.mul_vec(b, A.basis_vector(j))[k]) for j in range(A.dim)])
    return sympy.Matrix(rows).nullspace()


@pytest.mark.parametrize("A", [H, clifford(0, 1), clifford(1, 0), clifford(0, 3), clifford(2, 2), clifford_complex(3)], ids=repr)
def test_center_matches_dense_oracle(A):
    Z = center(A)
    oracle = _center_oracle(A)
    assert Z.dim == len(oracle)
    for v in oracle:
        assert Z.contains([from_sympy(x, A.field) for x in v])


def test_center_examples():
    assert center(H) == Subspace(H, [H.one()])
    assert center(clifford(0, 1)).dim == 2
    assert center(clifford(1, 0)).dim == 2


def test_trace_form_matches_operator_traces():
    for A in (H, clifford(1, 1), clifford(0, 3)):
        T = trace_form(A)
        Ls = [left_mult_matrix(A, A.basis_vector(i)) for i in range(A.dim)]
        for i, j in itertools.product(range(A.dim), repeat=2):
            assert to_sympy(T[i][j]) == (Ls[i] * Ls[j]).trace()


def test_radical_examples(dual):
    assert radical(H).dim == 0
    T = sympy.Matrix([[to_sympy(x) for x in row] for row in trace_form(H)])
    assert T.det() != 0
    R = radical(dual)
    assert R == Subspace(dual, [dual["d"]])
    assert radical(clifford(1, 0)).dim == 0


def _upper_triangular_2x2():
    # span{1, e12, e22}: radical is span{e12}
    A = GradedAlgebra(
        "rational", ["1", "n", "p"],
        [(0, 0, 0, 1), (0, 1, 1, 1), (0, 2, 2, 1), (1, 0, 1, 1), (2, 0, 2, 1),
         (2, 2, 2, 1), (1, 2, 1, 1)],
        [1, 0, 0],
    )
    return A


def test_radical_is_nilpotent_ideal(dual):
    for A in (dual, _upper_triangular_2x2()):
        R = radical(A)
        assert R.dim == 1
        assert R.is_ideal()
        for r in R.elements():
            assert not (r ** A.dim)


def test_minimal_polynomial_examples():
    assert minimal_polynomial(H, H["i"]) == [1, 0, 1]
    assert minimal_polynomial(H, H.one()) == [-1, 1]
    C = clifford(1, 0)
    assert minimal_polynomial(C, C["a1"]) == [-1, 0, 1]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_minimal_polynomial_annihilates(data):
    A = data.draw(st.sampled_from(ALGEBRAS + [_upper_triangular_2x2()]))
    x = A.element(data.draw(st.lists(st.integers(-3, 3), min_size=A.dim, max_size=A.dim)))
    m = minimal_polynomial(A, x)
    assert m[-1] == 1
    assert not any(poly_eval(A, m, x))
    # no lower-degree relation: 1, x, ..., x^(deg-1) independent
    powers = [(x ** k).coords for k in range(len(m) - 1)]
    assert span_rank(powers) == len(m) - 1


def test_factor_polynomial():
    assert factor_polynomial([-1, 0, 1], "rational") == [([-1, 1], 1), ([1, 1], 1)]
    assert factor_polynomial([1, 0, 1], "rational") == [([1, 0, 1], 1)]
    assert len(factor_polynomial([1, 0, 1], "gaussian")) == 2


def test_is_simple_examples(dual):
    assert is_simple(H).verdict == SIMPLE
    r = is_simple(clifford(1, 0))
    C = r.witness.algebra
    assert r.verdict == NOT_SIMPLE and r.witness == Subspace(C, [C.one() + C["a1"]])
    assert is_simple(clifford(0, 1)).verdict == SIMPLE
    assert is_simple(clifford_complex(1)).verdict == NOT_SIMPLE
    d = is_simple(dual)
    assert d.verdict == NOT_SIMPLE and d.witness == radical(dual)


def test_graded_simple():
    assert is_graded_simple(clifford(1, 0))
    assert is_graded_simple(H)
    for n in range(1, 6):
        assert is_graded_simple(twisted_group_algebra(n))


def test_graded_simple_unsupported(dual):
    mats, labels = matrix_units(2)
    with pytest.raises(Unsupported):
        is_graded_simple(matrix_algebra(2, mats, labels=labels))
    with pytest.raises(Unsupported):
        is_graded_simple(clifford(1, 0).with_degrees(1, [0, 0]))
    # dual numbers: d generates a proper graded ideal
    assert not is_graded_simple(dual)


@pytest.mark.parametrize("pq", [(p, n - p) for n in range(0, 5) for p in range(n + 1)])
def test_simple_implies_graded_simple(pq):
    A = clifford(*pq)
    res = is_simple(A)
    assert res.verdict != INDETERMINATE
    if res.verdict == SIMPLE:
        assert is_graded_simple(A)
    else:
        assert res.witness.is_proper() and res.witness.is_ideal()
