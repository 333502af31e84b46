"""
Quaternions as the algebra of even triples
==========================================

Give ``1, i, j, k`` the degrees ``(0,0,0), (0,1,1), (1,0,1), (1,1,0)`` in
(Z2)^3.  Two homogeneous quaternions then commute up to the sign
``(-1)^<a, b>`` of the ordinary dot product of their degrees.

The same table falls out of the group algebra of even triples once
products pick up one minus sign per left-to-right exchange of 1-entries.
"""

from zgraded import check_gamma_commutativity, check_grading, even_twisted_subalgebra, quaternions
from zgraded.cli import format_table

H = quaternions()
print(format_table(H))

# i and j have odd dot product, so they anticommute; i commutes with itself.
i, j, k = H["i"], H["j"], H["k"]
print("i*j =", i * j, "  j*i =", j * i, "  i*i =", i * i)
print("grading:", check_grading(H), "| sign rule:", check_gamma_commutativity(H))

###############################################################################
# Now build the twisted group algebra on the even subgroup of (Z2)^3.
# Its labels name the 1-entries: ``e2e3`` is the triple (0,1,1).

E = even_twisted_subalgebra(3)
print(format_table(E))
print("(0,1,1)*(1,0,1) =", E["e2e3"] * E["e1e3"], "   (1,0,1)*(0,1,1) =", E["e1e3"] * E["e2e3"])

# Matching basis elements by degree turns one table into the other.
by_degree = {E.degrees[k]: k for k in range(E.dim)}
perm = [by_degree[g] for g in H.degrees]
same = sorted((perm[a], perm[b], perm[c], s) for a, b, c, s in H.structure()) == sorted(E.structure())
print("even triples reproduce the quaternion table:", same)
