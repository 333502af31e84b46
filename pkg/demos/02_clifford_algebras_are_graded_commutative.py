"""
Clifford algebras are (Z2)^(n+1)-commutative
============================================

Generators of ``Cl_{p,q}`` anticommute, which is not commutativity in any
naive sense.  Grade generator ``a_i`` by ``e_i + e_{n+1}``: distinct
generators then have odd dot product and every generator has even
square-degree, so the sign rule ``ab = (-1)^<a,b> ba`` holds on the nose.
"""

import time

from zgraded import check_associativity, check_gamma_commutativity, check_grading, clifford, clifford_degree_map

print("generator degrees for n = 4:", [str(g) for g in clifford_degree_map(4)])

C = clifford(1, 2)
a1, a2, a3 = C["a1"], C["a2"], C["a3"]
print("a1*a2 =", a1 * a2, "  a2*a1 =", a2 * a1)
print("a1^2 =", a1 * a1, "  a3^2 =", a3 * a3)

###############################################################################
# Every ``Cl_{p,q}`` with ``p + q <= 6`` passes all three structural checks.

t0 = time.perf_counter()
for n in range(7):
    row = []
    for p in range(n + 1):
        A = clifford(p, n - p)
        ok = check_grading(A) and check_gamma_commutativity(A) and (n > 5 or check_associativity(A))
        assert ok, (p, n - p)
        row.append(f"Cl({p},{n - p}):ok")
    print("  ".join(row))
print(f"checked in {time.perf_counter() - t0:.2f}s")
