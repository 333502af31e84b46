"""
Looking for a graded-commutative structure on matrix algebras
=============================================================

``M_2`` and ``M_4`` admit (Z2)^m-commutative gradings: written in a basis
of Clifford images the search finds one quickly.  Matrix units never
commute up to sign, so that basis is rejected outright; the candidate
bases of ``M_3`` fail the same way.  The search is bounded and proves
nothing beyond its bound.
"""

from zgraded import check_gamma_commutativity, check_grading, grading_search, matrix_algebra
from zgraded.constructions import m2_clifford_basis, m3_candidate_bases, m4_clifford_basis, matrix_units

for size, (mats, labels), bound in ((2, m2_clifford_basis(), 3), (4, m4_clifford_basis(), 5)):
    M = matrix_algebra(size, mats, labels=labels)
    res = grading_search(M, bound)
    print(f"M{size}:", res)
    graded = M.with_degrees(res.m, res.degrees)
    print("   re-verified:", bool(check_grading(graded)), bool(check_gamma_commutativity(graded)))
    for label, g in list(zip(M.labels, res.degrees))[:6]:
        print(f"   {label:>8}: {g}")

mats, labels = m2_clifford_basis()
print("M2 with m <= 2:", grading_search(matrix_algebra(2, mats, labels=labels), 2))

mats, labels = matrix_units(2)
print("M2 matrix units:", grading_search(matrix_algebra(2, mats, labels=labels), 3))

for name, (mats, labels) in m3_candidate_bases().items():
    print(f"M3 {name}:", grading_search(matrix_algebra(3, mats, labels=labels), 4))
