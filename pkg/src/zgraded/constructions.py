"""Builders for twisted group algebras, Clifford algebras, quaternions and matrix algebras."""

from __future__ import annotations

from collections import deque
from typing import Mapping, Optional, Sequence

from ._common import CapExceeded, DimensionMismatch, Report
from .cocycle import SignCocycle
from .graded_algebra import AlgebraElement, GradedAlgebra
from .linalg import Echelon, solve_in_basis
from .scalars import GAUSSIAN, RATIONAL, clean, coerce, inverse
from .z2group import GroupElement, enumerate_even, enumerate_group, popcount

MAX_TWISTED_DIM = 12
MAX_CLIFFORD_GENERATORS = 10


def group_label(bits: int) -> str:
    """``e1e3`` for the element with coordinates 1 and 3 set; ``1`` for zero."""
    if not bits:
        return "1"
    return "".join(f"e{i + 1}" for i in range(bits.bit_length()) if bits >> i & 1)


def clifford_label(mask: int) -> str:
    if not mask:
        return "1"
    return "".join(f"a{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1)


def _twisted(elements: Sequence[int], n: int, F: SignCocycle, field: str) -> GradedAlgebra:
    if F.n != n:
        raise DimensionMismatch(f"cocycle has n={F.n}, group has n={n}")
    index = {g: k for k, g in enumerate(elements)}
    if any(F.sign(0, g) != 1 or F.sign(g, 0) != 1 for g in elements):
        raise ValueError("cocycle is not normalized: F(0, g) and F(g, 0) must be +1 so that 0 is the unit")
    one = coerce(1, field)
    structure = []
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            k = index.get(g ^ h)
            if k is None:
                raise ValueError("basis elements are not closed under the group law")
            structure.append((i, j, k, one * F.sign(g, h)))
    unit = [one if g == 0 else 0 for g in elements]
    return GradedAlgebra(
        field, [group_label(g) for g in elements], structure, unit, n, list(elements), F.form
    )


def twisted_group_algebra(n: int, F: Optional[SignCocycle] = None, field: str = RATIONAL) -> GradedAlgebra:
    """``K[(Z2)^n]`` with product ``g . h = F(g, h) (g + h)``; each element is its own degree."""
    if n > MAX_TWISTED_DIM:
        raise CapExceeded(f"n={n} exceeds twisted-algebra cap {MAX_TWISTED_DIM}")
    F = F if F is not None else SignCocycle.standard(n)
    return _twisted([g.bits for g in enumerate_group(n)], n, F, field)


def even_twisted_subalgebra(n_plus_1: int, F: Optional[SignCocycle] = None, field: str = RATIONAL) -> GradedAlgebra:
    """The twisted algebra restricted to elements with an even number of 1-entries."""
    if n_plus_1 > MAX_TWISTED_DIM:
        raise CapExceeded(f"n={n_plus_1} exceeds twisted-algebra cap {MAX_TWISTED_DIM}")
    F = F if F is not None else SignCocycle.standard(n_plus_1)
    return _twisted([g.bits for g in enumerate_even(n_plus_1)], n_plus_1, F, field)


def clifford_degree_map(n: int) -> list[GroupElement]:
    """Degrees of the generators in (Z2)^(n+1): ``e_i + e_{n+1}``."""
    if not 0 <= n <= MAX_CLIFFORD_GENERATORS:
        raise CapExceeded(f"n={n} exceeds Clifford cap {MAX_CLIFFORD_GENERATORS}")
    top = 1 << n
    return [GroupElement(n + 1, (1 << i) | top) for i in range(n)]


def inversions(S: int, T: int) -> int:
    """``#{(s, t) in S x T : s > t}`` for generator index sets packed as masks."""
    count = 0
    while T:
        low = T & -T
        # generators in S strictly above this t
        count += popcount(S & ~((low << 1) - 1))
        T ^= low
    return count


def clifford_sign(S: int, T: int, negative_mask: int) -> int:
    """Sign of ``alpha_S alpha_T`` relative to ``alpha_{S xor T}``.

    ``negative_mask`` marks the generators that square to ``-1``.
    """
    e = inversions(S, T) + popcount(S & T & negative_mask)
    return -1 if e & 1 else 1


def clifford(p: int, q: int, field: str = RATIONAL) -> GradedAlgebra:
    """``Cl_{p,q}``: generators ``a1..a_{p+q}``, the first p squaring to +1 and the rest to -1.

    Basis monomials are indexed by bit mask (ascending generator order) and
    graded by the generator degrees ``e_i + e_{n+1}`` extended additively.
    """
    n = p + q
    if p < 0 or q < 0 or n > MAX_CLIFFORD_GENERATORS:
        raise CapExceeded(f"Cl_({p},{q}) outside 0 <= p+q <= {MAX_CLIFFORD_GENERATORS}")
    negative = ((1 << n) - 1) & ~((1 << p) - 1)
    gen_deg = [g.bits for g in clifford_degree_map(n)]
    size = 1 << n
    degrees = []
    for S in range(size):
        d = 0
        for i in range(n):
            if S >> i & 1:
                d ^= gen_deg[i]
        degrees.append(d)
    one = coerce(1, field)
    structure = [(S, T, S ^ T, one * clifford_sign(S, T, negative)) for S in range(size) for T in range(size)]
    unit = [one] + [0] * (size - 1)
    return GradedAlgebra(field, [clifford_label(S) for S in range(size)], structure, unit, n + 1, degrees)


def clifford_complex(n: int) -> GradedAlgebra:
    """``Cl_n(C)`` over the Gaussian rationals, every generator squaring to +1."""
    return clifford(n, 0, GAUSSIAN)


QUATERNION_DEGREES = {"1": (0, 0, 0), "i": (0, 1, 1), "j": (1, 0, 1), "k": (1, 1, 0)}


def quaternions(field: str = RATIONAL) -> GradedAlgebra:
    """Hamilton's quaternions graded by the triple degrees in (Z2)^3."""
    labels = ["1", "i", "j", "k"]
    # Hamilton: i^2 = j^2 = k^2 = ijk = -1
    table = {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    for x in labels:
        table[("1", x)] = (1, x)
        table[(x, "1")] = (1, x)
    idx = {x: k for k, x in enumerate(labels)}
    structure = [(idx[a], idx[b], idx[c], s) for (a, b), (s, c) in table.items()]
    degrees = [GroupElement.from_tuple(QUATERNION_DEGREES[x]) for x in labels]
    return GradedAlgebra(field, labels, structure, [1, 0, 0, 0], 3, degrees)


# -- matrix algebras ---------------------------------------------------------


def matmul(X, Y):
    m = len(X)
    return [[clean(sum(X[i][k] * Y[k][j] for k in range(m))) for j in range(m)] for i in range(m)]


def _flat(M):
    return [x for row in M for x in row]


def matrix_algebra(
    m: int, basis_elements: Sequence, field: str = RATIONAL, labels: Optional[Sequence[str]] = None
) -> GradedAlgebra:
    """Structure constants of ``M_m`` in the given basis of exact matrices; no degree map."""
    mats = [[[coerce(x, field) for x in row] for row in M] for M in basis_elements]
    if len(mats) != m * m or any(len(M) != m or any(len(r) != m for r in M) for M in mats):
        raise ValueError(f"need {m * m} matrices of size {m}x{m}")
    flat = [_flat(M) for M in mats]
    products = [matmul(A, B) for A in mats for B in mats]
    try:
        coords = solve_in_basis(flat, [_flat(P) for P in products])
    except ValueError as exc:
        raise ValueError(f"not a basis of M_{m}: {exc}") from None
    d = m * m
    structure = [(i, j, k, c) for i in range(d) for j in range(d) for k, c in enumerate(coords[i * d + j]) if c]
    ident = [[1 if r == c else 0 for c in range(m)] for r in range(m)]
    unit = solve_in_basis(flat, [_flat(ident)])[0]
    labels = list(labels) if labels is not None else [f"m{k}" for k in range(d)]
    return GradedAlgebra(field, labels, structure, unit)


def matrix_units(m: int) -> tuple[list, list[str]]:
    mats, labels = [], []
    for r in range(m):
        for c in range(m):
            M = [[0] * m for _ in range(m)]
            M[r][c] = 1
            mats.append(M)
            labels.append(f"E{r + 1}{c + 1}")
    return mats, labels


_X = [[0, 1], [1, 0]]
_Z = [[1, 0], [0, -1]]
_J = [[0, -1], [1, 0]]
_I2 = [[1, 0], [0, 1]]


def kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def clifford_image_basis(generators: Sequence, labels_prefix: str = "a") -> tuple[list, list[str]]:
    """All ascending monomials in anticommuting generator matrices, as a basis list."""
    n = len(generators)
    size = len(generators[0])
    ident = [[1 if r == c else 0 for c in range(size)] for r in range(size)]
    mats, labels = [], []
    for S in range(1 << n):
        M = ident
        for i in range(n):
            if S >> i & 1:
                M = matmul(M, generators[i])
        mats.append(M)
        labels.append(clifford_label(S).replace("a", labels_prefix) if S else "1")
    return mats, labels


def m2_clifford_basis() -> tuple[list, list[str]]:
    """``M_2`` spanned by the images of ``Cl_{2,0}``: ``1, X, Z, XZ``."""
    return clifford_image_basis([_X, _Z])


def m4_clifford_basis() -> tuple[list, list[str]]:
    """``M_4`` spanned by the images of ``Cl_{2,2}`` built from Kronecker products."""
    gens = [kron(_X, _I2), kron(_J, _I2), kron(_Z, _X), kron(_Z, _J)]
    return clifford_image_basis(gens)


def m3_candidate_bases() -> dict[str, tuple[list, list[str]]]:
    """Monomial bases of ``M_3`` built from the cyclic shift and rational sign-clock matrices."""
    P = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    diag = {
        "D0": ident,
        "D1": [[1, 0, 0], [0, -1, 0], [0, 0, 1]],
        "D2": [[1, 0, 0], [0, 1, 0], [0, 0, -1]],
    }
    powers = {"P0": ident, "P1": P, "P2": matmul(P, P)}
    shift_sign = ([], [])
    for dn, D in diag.items():
        for pn, Pk in powers.items():
            shift_sign[0].append(matmul(D, Pk))
            shift_sign[1].append(f"{dn}{pn}")
    # diagonal matrix units against shift powers
    units = ([], [])
    for r in range(3):
        E = [[1 if (a == b == r) else 0 for b in range(3)] for a in range(3)]
        for pn, Pk in powers.items():
            units[0].append(matmul(E, Pk))
            units[1].append(f"E{r + 1}{pn}")
    return {"matrix-units": matrix_units(3), "sign-shift": shift_sign, "unit-shift": units}


# -- isomorphisms ------------------------------------------------------------


def check_generator_iso(A: GradedAlgebra, B: GradedAlgebra, gmap: Mapping[str, AlgebraElement]) -> Report:
    """Extend ``gmap`` multiplicatively from generators of A and compare structure constants.

    Each basis element of A is reached as a single-term product of a known
    element and a generator (either side); its image is then forced.  The
    unit of A is reached the same way when possible, so square-sign
    mismatches show up as a unit that does not map to the unit of B.
    """
    if A.field != B.field:
        return Report(False, None, f"fields differ: {A.field} vs {B.field}")
    gens = []
    for label, target in gmap.items():
        if target.algebra is not B:
            raise ValueError(f"image of {label!r} is not an element of the target algebra")
        gens.append((A.index(label), target.coords))

    images: dict[int, tuple] = {}
    queue = deque()
    for g, img in gens:
        if g in images and images[g] != img:
            return Report(False, (A.labels[g],), "generator mapped twice")
        images[g] = img
        queue.append(g)
    while queue:
        u = queue.popleft()
        for g, gimg in gens:
            for (left, right, limg, rimg) in ((u, g, images[u], gimg), (g, u, gimg, images[u])):
                terms = A.table[left][right]
                if len(terms) != 1:
                    continue
                (w, c), = terms
                if w in images:
                    continue
                images[w] = tuple(x * inverse(c) for x in B.mul_vec(limg, rimg))
                queue.append(w)
    unit_idx = [k for k, c in enumerate(A.unit) if c]
    if len(unit_idx) == 1 and unit_idx[0] not in images:
        k = unit_idx[0]
        images[k] = tuple(x * inverse(A.unit[k]) for x in B.unit)
    missing = [A.labels[k] for k in range(A.dim) if k not in images]
    if missing:
        raise ValueError(f"generators do not reach basis elements {missing}")

    phi = [images[k] for k in range(A.dim)]
    e = Echelon(B.dim)
    for k, v in enumerate(phi):
        if e.add(v) is not None:
            return Report(False, (A.labels[k],), "images are linearly dependent")
    if A.dim != B.dim:
        return Report(False, None, "not an isomorphism onto: dimensions differ")

    def push(v):
        out = [0] * B.dim
        for k, c in enumerate(v):
            if c:
                for t, x in enumerate(phi[k]):
                    out[t] = out[t] + c * x
        return tuple(coerce(clean(x), B.field) for x in out)

    if push(A.unit) != B.unit:
        return Report(False, ("unit",), "unit does not map to unit")
    for i in range(A.dim):
        for j in range(A.dim):
            expect = push(A.mul_vec(A.basis_vector(i), A.basis_vector(j)))
            if B.mul_vec(phi[i], phi[j]) != expect:
                return Report(False, (A.labels[i], A.labels[j]), "structure constants differ")
    return Report(True, message=f"{A.dim ** 2} products transported")
