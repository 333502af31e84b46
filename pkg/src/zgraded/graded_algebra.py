"""Finite-dimensional algebras with (Z2)^n degree maps and exact structure constants."""

from __future__ import annotations

from typing import Callable, Iterable, Optional, Sequence

from ._common import CapExceeded, Report
from .cocycle import MAX_COCYCLE_DIM, SignCocycle, cocycle_from_table, is_cocycle, is_cocycle_on
from .scalars import FIELDS, Scalar, clean, coerce, format_term
from .z2group import GroupElement, dot_bits

MAX_ASSOC_DIM = 256


class GradedAlgebra:
    """Basis ``b_0 .. b_{d-1}`` with ``b_i b_j = sum_k c[i,j,k] b_k``.

    ``degrees`` holds packed (Z2)^n words, or is None for an ungraded
    algebra (matrix algebras before a grading has been found).  The table is
    stored sparsely; ``table[i][j]`` is a tuple of ``(k, c)`` sorted by k.
    """

    def __init__(
        self,
        field: str,
        labels: Sequence[str],
        structure: Iterable[tuple[int, int, int, Scalar]],
        unit: Sequence[Scalar],
        n: Optional[int] = None,
        degrees: Optional[Sequence[int]] = None,
        cocycle_form=None,
    ):
        if field not in FIELDS:
            raise ValueError(f"unknown field {field!r}")
        self.field = field
        self.labels = tuple(labels)
        d = len(self.labels)
        if len(set(self.labels)) != d:
            raise ValueError("basis labels must be distinct")
        if (n is None) != (degrees is None):
            raise ValueError("n and degrees must be given together")
        if degrees is not None:
            degrees = tuple(int(g.bits) if isinstance(g, GroupElement) else int(g) for g in degrees)
            if len(degrees) != d or any(g < 0 or g >> n for g in degrees):
                raise ValueError("degree map does not match basis/grading dimension")
        self.n = n
        self.degrees = degrees
        self.cocycle_form = cocycle_form

        acc: dict[tuple[int, int], dict[int, Scalar]] = {}
        for i, j, k, c in structure:
            if not all(0 <= x < d for x in (i, j, k)):
                raise ValueError(f"structure index out of range: {(i, j, k)}")
            c = coerce(c, field)
            cell = acc.setdefault((i, j), {})
            if k in cell:
                raise ValueError(f"duplicate structure entry {(i, j, k)}")
            if c:
                cell[k] = c
        self.table = [[tuple(sorted(acc.get((i, j), {}).items())) for j in range(d)] for i in range(d)]

        if len(unit) != d:
            raise ValueError("unit has wrong length")
        self.unit = tuple(coerce(c, field) for c in unit)
        for i in range(d):
            b = self.basis_vector(i)
            if self.mul_vec(self.unit, b) != b or self.mul_vec(b, self.unit) != b:
                raise ValueError(f"unit does not act as identity on {self.labels[i]!r}")

    # -- basic data ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def graded(self) -> bool:
        return self.degrees is not None

    def degree(self, i: int) -> GroupElement:
        if self.degrees is None:
            raise ValueError("algebra carries no degree map")
        return GroupElement(self.n, self.degrees[i])

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no basis element labelled {label!r}") from None

    def structure(self) -> list[tuple[int, int, int, Scalar]]:
        return [(i, j, k, c) for i, row in enumerate(self.table) for j, cell in enumerate(row) for k, c in cell]

    def with_degrees(self, n: int, degrees: Sequence) -> "GradedAlgebra":
        return GradedAlgebra(self.field, self.labels, self.structure(), self.unit, n, degrees, self.cocycle_form)

    def zero_vec(self) -> tuple:
        z = coerce(0, self.field)
        return (z,) * self.dim

    def basis_vector(self, i: int) -> tuple:
        z, o = coerce(0, self.field), coerce(1, self.field)
        return tuple(o if k == i else z for k in range(self.dim))

    # -- products -----------------------------------------------------------

    def mul_vec(self, x: Sequence, y: Sequence) -> tuple:
        out = [0] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            row = self.table[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return tuple(coerce(clean(v), self.field) for v in out)

    def basis_product(self, i: int, j: int) -> dict[int, Scalar]:
        return dict(self.table[i][j])

    # -- elements -----------------------------------------------------------

    def element(self, coords: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def basis(self) -> list["AlgebraElement"]:
        return [AlgebraElement(self, self.basis_vector(i)) for i in range(self.dim)]

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.unit)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, self.zero_vec())

    def __getitem__(self, label: str) -> "AlgebraElement":
        return AlgebraElement(self, self.basis_vector(self.index(label)))

    def format_vec(self, v: Sequence) -> str:
        terms = [format_term(c, self.labels[k]) for k, c in enumerate(v) if c]
        return "".join(terms) if terms else "0"

    def __repr__(self):
        grading = f"(Z2)^{self.n}" if self.graded else "ungraded"
        return f"<GradedAlgebra dim={self.dim} field={self.field} {grading}>"


class AlgebraElement:
    """Dense exact coordinate vector over a parent algebra's basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: GradedAlgebra, coords: Sequence):
        if len(coords) != algebra.dim:
            raise ValueError(f"expected {algebra.dim} coordinates, got {len(coords)}")
        self.algebra = algebra
        self.coords = tuple(coerce(c, algebra.field) for c in coords)

    def _check(self, other: "AlgebraElement") -> None:
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def _wrap(self, coords) -> "AlgebraElement":
        return AlgebraElement(self.algebra, coords)

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + self.algebra.one() * other
        self._check(other)
        return self._wrap([a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-a for a in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return self._wrap([a * other for a in self.coords])

    def __rmul__(self, other):
        return self._wrap([other * a for a in self.coords])

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coords) if c]

    def homogeneous_degree(self) -> Optional[int]:
        """Packed degree of a homogeneous element, None if inhomogeneous.

        The zero element is homogeneous of every degree; 0 is returned for it.
        """
        degs = {self.algebra.degrees[k] for k in self.support()}
        if len(degs) > 1:
            return None
        return degs.pop() if degs else 0

    def __repr__(self):
        return self.algebra.format_vec(self.coords)


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check(y)
    return AlgebraElement(x.algebra, x.algebra.mul_vec(x.coords, y.coords))


# -- verifiers ---------------------------------------------------------------


def _require_degrees(A: GradedAlgebra) -> None:
    if not A.graded:
        raise ValueError("algebra carries no degree map")


def check_grading(A: GradedAlgebra) -> Report:
    """Every product ``b_i b_j`` is supported in degree ``deg i + deg j``."""
    _require_degrees(A)
    deg = A.degrees
    for i in range(A.dim):
        for j in range(A.dim):
            target = deg[i] ^ deg[j]
            for k, _ in A.table[i][j]:
                if deg[k] != target:
                    return Report(False, (i, j, k), f"{A.labels[i]}*{A.labels[j]} has a term in {A.labels[k]}")
    return Report(True, message=f"{A.dim ** 2} basis pairs")


def _commutation(A: GradedAlgebra, sign_of: Callable[[int, int], int], what: str) -> Report:
    for i in range(A.dim):
        for j in range(A.dim):
            s = sign_of(i, j)
            ij = A.table[i][j]
            ji = A.table[j][i]
            if ij != tuple((k, s * c) for k, c in ji):
                return Report(
                    False, (i, j), f"{A.labels[i]}*{A.labels[j]} != ({s:+d}) {A.labels[j]}*{A.labels[i]} ({what})"
                )
    return Report(True, message=f"{A.dim ** 2} basis pairs")


def check_gamma_commutativity(A: GradedAlgebra) -> Report:
    """``b_i b_j = (-1)^<deg i, deg j> b_j b_i`` for every basis pair.

    Bilinearity extends the basis-pair check to all homogeneous elements.
    """
    graded = check_grading(A)
    if not graded:
        raise ValueError(f"grading check fails ({graded}); commutativity sign is undefined")
    deg = A.degrees
    return _commutation(A, lambda i, j: -1 if dot_bits(deg[i], deg[j]) else 1, "scalar product sign")


def check_beta_commutativity(A: GradedAlgebra, beta: Callable) -> Report:
    """``b_i b_j = beta(deg i, deg j) b_j b_i`` with ``beta`` symmetric on the degrees in use.

    ``beta`` receives two GroupElements and returns +1 or -1.
    """
    graded = check_grading(A)
    if not graded:
        raise ValueError(f"grading check fails ({graded})")
    degs = sorted(set(A.degrees))
    cache = {}
    for a in degs:
        for b in degs:
            ga, gb = GroupElement(A.n, a), GroupElement(A.n, b)
            v = beta(ga, gb)
            if v not in (1, -1):
                raise ValueError(f"beta must be sign-valued, got {v!r}")
            cache[a, b] = v
    for a in degs:
        for b in degs:
            if cache[a, b] != cache[b, a]:
                return Report(False, (GroupElement(A.n, a), GroupElement(A.n, b)), "beta is not symmetric")
    deg = A.degrees
    return _commutation(A, lambda i, j: cache[deg[i], deg[j]], "beta")


def check_associativity(A: GradedAlgebra) -> Report:
    """``(b_i b_j) b_k = b_i (b_j b_k)`` exactly, for every basis triple."""
    d = A.dim
    if d > MAX_ASSOC_DIM:
        raise CapExceeded(f"associativity check is cubic; dim {d} exceeds cap {MAX_ASSOC_DIM}")
    T = A.table
    for i in range(d):
        Ti = T[i]
        for j in range(d):
            left_ij = Ti[j]
            Tj = T[j]
            for k in range(d):
                left: dict[int, Scalar] = {}
                for m, c1 in left_ij:
                    for l, c2 in T[m][k]:
                        left[l] = left.get(l, 0) + c1 * c2
                right: dict[int, Scalar] = {}
                for m, c1 in Tj[k]:
                    for l, c2 in Ti[m]:
                        right[l] = right.get(l, 0) + c1 * c2
                left = {l: c for l, c in left.items() if c}
                right = {l: c for l, c in right.items() if c}
                if left != right:
                    return Report(False, (i, j, k), "(b_i b_j) b_k != b_i (b_j b_k)")
    return Report(True, message=f"{d ** 3} basis triples")


def check_cocycle(A: GradedAlgebra) -> Report:
    """Read a sign cocycle off a twisted-group-shaped algebra and test the cocycle identity.

    The algebra must have one basis element per degree, the degrees must form
    a subgroup, and each basis product must be ``+/-`` the basis element of
    the summed degree.  A serialized bilinear form, when present, is checked
    as well.
    """
    _require_degrees(A)
    deg = A.degrees
    if len(set(deg)) != A.dim:
        return Report(False, None, "degrees are not distinct; no group-indexed sign table")
    by_deg = {g: k for k, g in enumerate(deg)}
    signs = {}
    for i in range(A.dim):
        for j in range(A.dim):
            k = by_deg.get(deg[i] ^ deg[j])
            terms = A.table[i][j]
            if k is None or len(terms) != 1 or terms[0][0] != k or terms[0][1] not in (1, -1):
                return Report(False, (i, j), "product is not a signed basis element of the summed degree")
            signs[deg[i], deg[j]] = 1 if terms[0][1] == 1 else -1
    F = cocycle_from_table(A.n, signs)
    rep = is_cocycle_on(F, deg)
    if not rep:
        return rep
    if A.cocycle_form is not None and A.n <= MAX_COCYCLE_DIM:
        form_rep = is_cocycle(SignCocycle.from_form(A.cocycle_form))
        if not form_rep:
            return form_rep
    return rep
