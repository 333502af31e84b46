import pytest

from zgraded.constructions import (
    clifford,
    m2_clifford_basis,
    m3_candidate_bases,
    m4_clifford_basis,
    matrix_algebra,
    matrix_units,
    quaternions,
)
from zgraded.grading_search import (
    EXHAUSTED,
    FOUND,
    NONE,
    OBSTRUCTION,
    _gf2_nullspace,
    commutation_signs,
    grading_search,
)
from zgraded.graded_algebra import GradedAlgebra, check_gamma_commutativity, check_grading


def ungraded(A):
    return GradedAlgebra(A.field, A.labels, A.structure(), A.unit)


def _verify(A, res):
    assert res.status == FOUND
    graded = A.with_degrees(res.m, res.degrees)
    assert check_grading(graded)
    assert check_gamma_commutativity(graded)
    assert res.degrees[A.unit.index(1)].bits == 0


def test_m2_clifford_basis():
    mats, labels = m2_clifford_basis()
    M2 = matrix_algebra(2, mats, labels=labels)
    res = grading_search(M2, 3)
    _verify(M2, res)
    assert res.m == 3
    assert grading_search(M2, 2).status == NONE


def test_m4_clifford_basis():
    mats, labels = m4_clifford_basis()
    M4 = matrix_algebra(4, mats, labels=labels)
    res = grading_search(M4, 5)
    _verify(M4, res)


def test_matrix_unit_obstruction():
    mats, labels = matrix_units(2)
    res = grading_search(matrix_algebra(2, mats, labels=labels), 3)
    assert res.status == OBSTRUCTION
    assert res.witness == ("E11", "E12")


@pytest.mark.parametrize("name", sorted(m3_candidate_bases()))
def test_m3_candidates_have_no_grading(name):
    mats, labels = m3_candidate_bases()[name]
    res = grading_search(matrix_algebra(3, mats, labels=labels), 4)
    assert res.status in (NONE, OBSTRUCTION)


@pytest.mark.parametrize("A", [quaternions(), clifford(0, 3), clifford(2, 1), clifford(1, 0)], ids=repr)
def test_regrades_constructed_algebras(A):
    B = ungraded(A)
    res = grading_search(B, A.n)
    _verify(B, res)
    assert res.m <= A.n


def test_budget_exhaustion_is_distinct():
    mats, labels = m4_clifford_basis()
    res = grading_search(matrix_algebra(4, mats, labels=labels), 5, budget=10)
    assert res.status == EXHAUSTED


def test_commutation_signs():
    signs, bad = commutation_signs(quaternions())
    assert bad is None
    assert signs[1, 2] == 1 and signs[1, 1] == 0 and signs[0, 3] == 0


def test_gf2_nullspace():
    # x0 + x1 = 0, x2 = 0 over three unknowns
    basis = _gf2_nullspace([0b011, 0b100], 3)
    assert basis == [0b011]
