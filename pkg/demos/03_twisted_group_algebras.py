"""
Twisted group algebras and 2-cocycles
=====================================

Multiply group elements of (Z2)^n by adding them, then rescale by a sign
``F(a, b)``.  The result is associative exactly when ``F`` satisfies the
cocycle identity.  With ``F(a, b) = (-1)^(sum_{i>j} a_i b_j)`` the result is
the complex Clifford algebra; on the even subgroup of (Z2)^(n+1) it is the
real ``Cl_{0,n}``.
"""

from zgraded import (
    SignCocycle,
    beta_of,
    check_associativity,
    check_beta_commutativity,
    check_generator_iso,
    clifford,
    clifford_complex,
    even_twisted_subalgebra,
    is_cocycle,
    twisted_group_algebra,
)
from zgraded.z2group import GroupElement

F = SignCocycle.standard(3)
a, b = GroupElement.from_tuple((0, 1, 0)), GroupElement.from_tuple((1, 0, 0))
A = twisted_group_algebra(3, F)
print("(0,1,0)*(1,0,0) =", A["e2"] * A["e1"])
print("cocycle identity:", is_cocycle(F))

###############################################################################
# A non-bilinear exponent breaks the identity and, with it, associativity.
# The witness triple is the same for both checks.

bad = SignCocycle(2, lambda x, y: x & y & (y >> 1) & 1, name="a1*b1*b2")
print("planted exponent:", is_cocycle(bad))
print("twisted product: ", check_associativity(twisted_group_algebra(2, bad)))

###############################################################################
# Graded by the group itself, the twisted algebra commutes up to
# ``beta(a, b) = F(a, b) F(b, a)`` rather than the plain dot-product sign.

print("beta((0,1,0),(1,0,0)) =", beta_of(F, a, b))
print("beta-commutative:", check_beta_commutativity(A, lambda x, y: beta_of(F, x, y)))

###############################################################################
# Generator maps extend to isomorphisms.

for n in range(1, 6):
    C, T = clifford_complex(n), twisted_group_algebra(n, field="gaussian")
    r1 = check_generator_iso(C, T, {f"a{i}": T[f"e{i}"] for i in range(1, n + 1)})
    R, E = clifford(0, n), even_twisted_subalgebra(n + 1)
    r2 = check_generator_iso(R, E, {f"a{i}": E[f"e{i}e{n + 1}"] for i in range(1, n + 1)})
    print(f"n={n}: Cl_n(C) ~ twisted: {bool(r1)}   Cl_0,n ~ even twisted: {bool(r2)}")
