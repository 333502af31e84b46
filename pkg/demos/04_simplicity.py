"""
Simple and graded-simple
========================

Over the rationals, ``Cl_{p,q}`` is simple exactly when ``p - q`` is not
``1 mod 4``.  When it is not simple the decision procedure hands back a
proper two-sided ideal.  ``Cl_{1,0}`` is the smallest case where graded
simplicity and simplicity disagree.
"""

from zgraded import clifford, clifford_complex, is_graded_simple, is_simple, quaternions

print("quaternions:", is_simple(quaternions()))

for n in range(6):
    cells = []
    for p in range(n + 1):
        res = is_simple(clifford(p, n - p))
        cells.append(f"Cl({p},{n - p})={res.verdict}")
    print("  ".join(cells))

###############################################################################
# Complex Clifford algebras: even ones are simple, odd ones split.

for n in range(6):
    print(f"Cl_{n}(C):", is_simple(clifford_complex(n)).verdict)

###############################################################################
# The ideal spanned by 1 + a1 in Cl_{1,0} is proper but not graded.

C = clifford(1, 0)
print("Cl(1,0) graded-simple:", is_graded_simple(C))
print("Cl(1,0) simple:", is_simple(C))
