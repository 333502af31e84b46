"""Ideals, center, radical, minimal polynomials and the simplicity decision."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from ._common import CapExceeded, Unsupported
from .graded_algebra import AlgebraElement, GradedAlgebra
from .linalg import Echelon, nullspace
from .scalars import GAUSSIAN, Gaussian, clean, coerce, div

MAX_ANALYSIS_DIM = 256

SIMPLE = "simple"
NOT_SIMPLE = "not_simple"
INDETERMINATE = "indeterminate"


def _cap(A: GradedAlgebra) -> None:
    if A.dim > MAX_ANALYSIS_DIM:
        raise CapExceeded(f"dim {A.dim} exceeds analysis cap {MAX_ANALYSIS_DIM}")


def _coords(A: GradedAlgebra, x) -> tuple:
    if isinstance(x, AlgebraElement):
        if x.algebra is not A:
            raise ValueError("element belongs to a different algebra")
        return x.coords
    return tuple(coerce(c, A.field) for c in x)


class Subspace:
    """A subspace of an algebra held as a reduced row echelon basis.

    The rows are canonical, so two Subspaces are equal iff they span the same space.
    """

    def __init__(self, algebra: GradedAlgebra, vectors: Sequence = ()):
        self.algebra = algebra
        e = Echelon(algebra.dim)
        for v in vectors:
            e.add(_coords(algebra, v))
        self._echelon = e
        self.rows = tuple(tuple(coerce(x, algebra.field) for x in r) for r in e.rref())
        self.pivots = tuple(e.pivots)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, x) -> bool:
        return self._echelon.contains(_coords(self.algebra, x))

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.algebra, r) for r in self.rows]

    def is_proper(self) -> bool:
        return 0 < self.dim < self.algebra.dim

    def is_ideal(self) -> bool:
        """Closed under left and right multiplication by every basis element."""
        A = self.algebra
        for r in self.rows:
            for i in range(A.dim):
                b = A.basis_vector(i)
                if not self.contains(A.mul_vec(b, r)) or not self.contains(A.mul_vec(r, b)):
                    return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.algebra is other.algebra and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join(self.algebra.format_vec(r) for r in self.rows)
        return f"span{{{body}}}" if body else "{0}"


def ideal_closure(A: GradedAlgebra, gens: Sequence) -> Subspace:
    """Smallest two-sided ideal containing ``gens``."""
    _cap(A)
    e = Echelon(A.dim)
    queue = []
    for g in gens:
        v = _coords(A, g)
        if e.add(v) is None:
            queue.append(v)
    basis = [A.basis_vector(i) for i in range(A.dim)]
    while queue:
        v = queue.pop()
        for b in basis:
            for w in (A.mul_vec(b, v), A.mul_vec(v, b)):
                if any(w) and e.add(w) is None:
                    queue.append(w)
        if len(e) == A.dim:
            break
    return Subspace(A, e.rows)


def is_graded_simple(A: GradedAlgebra) -> bool:
    """True iff every nonzero homogeneous element generates the whole algebra.

    Only algebras whose graded components are at most one-dimensional are
    supported; there every homogeneous element is a multiple of a basis
    element, so the basis check is complete.
    """
    _cap(A)
    if not A.graded:
        raise Unsupported("algebra carries no degree map")
    if len(set(A.degrees)) != A.dim:
        raise Unsupported("a graded component has dimension > 1")
    return all(ideal_closure(A, [A.basis_vector(i)]).dim == A.dim for i in range(A.dim))


def center(A: GradedAlgebra) -> Subspace:
    """Solution space of ``x b_i - b_i x = 0`` for every basis element."""
    _cap(A)
    d = A.dim
    rows = []
    for i in range(d):
        # column j holds the coordinates of b_j b_i - b_i b_j
        cols = []
        for j in range(d):
            diff = dict(A.table[j][i])
            for k, c in A.table[i][j]:
                diff[k] = diff.get(k, 0) - c
            cols.append(diff)
        for k in range(d):
            row = [clean(cols[j].get(k, 0)) for j in range(d)]
            if any(row):
                rows.append(row)
    return Subspace(A, nullspace(rows, d) if rows else [A.basis_vector(i) for i in range(d)])


def trace_form(A: GradedAlgebra) -> list[list]:
    """Matrix of ``(x, y) -> trace(L_x L_y)`` on the basis, from the left-multiplication operators."""
    _cap(A)
    d = A.dim
    # L[i] as a dict {(k, l): c} with (L_i)_{kl} = coefficient of b_k in b_i b_l
    L = []
    for i in range(d):
        op = {}
        for l in range(d):
            for k, c in A.table[i][l]:
                op[k, l] = c
        L.append(op)
    by_col = []
    for i in range(d):
        cols: dict[int, list] = {}
        for (k, l), c in L[i].items():
            cols.setdefault(l, []).append((k, c))
        by_col.append(cols)
    T = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            # trace(L_i L_j) = sum_{k,l} (L_i)_{kl} (L_j)_{lk}
            s = 0
            Lj = L[j]
            for (k, l), c in L[i].items():
                c2 = Lj.get((l, k))
                if c2:
                    s = s + c * c2
            T[i][j] = T[j][i] = clean(s)
    return T


def radical(A: GradedAlgebra) -> Subspace:
    """Kernel of the trace form; this is the Jacobson radical in characteristic 0."""
    T = trace_form(A)
    return Subspace(A, nullspace(T, A.dim))


# -- polynomials -------------------------------------------------------------


def minimal_polynomial(A: GradedAlgebra, x) -> list:
    """Monic minimal polynomial of ``x`` as coefficients, constant term first."""
    _cap(A)
    x = _coords(A, x)
    e = Echelon(A.dim, track=True)
    power = A.unit
    for _ in range(A.dim + 2):
        dep = e.add(power)
        if dep is not None:
            lead = dep[-1]
            return [coerce(div(c, lead), A.field) for c in dep]
        power = A.mul_vec(power, x)
    raise AssertionError("powers of an element must become dependent within dim + 1 steps")


def poly_eval(A: GradedAlgebra, coeffs: Sequence, x) -> tuple:
    """Horner evaluation of a polynomial (constant term first) at an algebra element."""
    x = _coords(A, x)
    acc = A.zero_vec()
    for c in reversed(coeffs):
        acc = A.mul_vec(acc, x)
        acc = tuple(coerce(clean(a + c * u), A.field) for a, u in zip(acc, A.unit))
    return acc


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    t = sympy.Symbol(var)
    return str(sympy.expand(_to_sympy_expr(coeffs, t)))


def _to_sympy(c):
    if isinstance(c, Gaussian):
        return sympy.Rational(Fraction(c.re).numerator, Fraction(c.re).denominator) + sympy.I * sympy.Rational(
            Fraction(c.im).numerator, Fraction(c.im).denominator
        )
    c = Fraction(c)
    return sympy.Rational(c.numerator, c.denominator)


def _from_sympy(c, field: str):
    re, im = sympy.re(c), sympy.im(c)
    re = Fraction(int(re.p), int(re.q))
    im = Fraction(int(im.p), int(im.q))
    return coerce(Gaussian(re, im) if im else re, field)


def _to_sympy_expr(coeffs, t):
    return sum((_to_sympy(c) * t**k for k, c in enumerate(coeffs)), sympy.Integer(0))


def factor_polynomial(coeffs: Sequence, field: str) -> list[tuple[list, int]]:
    """Monic irreducible factors over Q or Q(i), with multiplicities, in a fixed order."""
    t = sympy.Symbol("t")
    expr = _to_sympy_expr(coeffs, t)
    opts = {"gaussian": True} if field == GAUSSIAN else {}
    _, factors = sympy.factor_list(expr, t, **opts)
    out = []
    for f, mult in factors:
        poly = sympy.Poly(f, t, **opts)
        cs = [_from_sympy(c, field) for c in reversed(poly.all_coeffs())]
        lead = cs[-1]
        cs = [coerce(div(c, lead), field) for c in cs]
        out.append((cs, mult))
    return out


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return [clean(c) for c in out]


# -- simplicity --------------------------------------------------------------


@dataclass(frozen=True)
class SimplicityResult:
    verdict: str
    witness: Optional[Subspace] = None
    detail: str = ""
    field: str = ""

    def __str__(self):
        line = self.verdict
        if self.witness is not None:
            line += f" witness={self.witness!r}"
        if self.detail:
            line += f" ({self.detail})"
        return line


def _center_candidates(rows: Sequence[tuple], limit: int = 64):
    yield from rows
    k = len(rows)
    for coeffs in itertools.product(range(-2, 3), repeat=k):
        if limit <= 0:
            return
        if sum(1 for c in coeffs if c) < 2:
            continue
        limit -= 1
        yield tuple(clean(sum(c * r[m] for c, r in zip(coeffs, rows))) for m in range(len(rows[0])))


def is_simple(A: GradedAlgebra) -> SimplicityResult:
    """Tri-state simplicity decision over the algebra's own scalar field.

    A nonzero radical is a proper ideal.  A semisimple algebra is simple iff
    its center is a field; a one-dimensional center settles this directly,
    otherwise center elements are tried until one has a split minimal
    polynomial (a proper ideal appears) or an irreducible one of full degree.
    """
    _cap(A)
    rad = radical(A)
    if rad.dim:
        return SimplicityResult(NOT_SIMPLE, rad, "nonzero radical", A.field)
    Z = center(A)
    if Z.dim == 1:
        return SimplicityResult(SIMPLE, None, "semisimple with one-dimensional center", A.field)
    for z in _center_candidates(Z.rows):
        m = minimal_polynomial(A, z)
        factors = factor_polynomial(m, A.field)
        if len(factors) >= 2:
            first, mult = factors[0]
            cof = [1]
            for f, k in factors[1:]:
                for _ in range(k):
                    cof = _poly_mul(cof, f)
            gen = poly_eval(A, cof, z)
            witness = ideal_closure(A, [gen])
            if witness.is_proper():
                return SimplicityResult(
                    NOT_SIMPLE, witness, f"center element has split minimal polynomial {format_poly(m)}", A.field
                )
        elif factors and factors[0][1] == 1 and len(m) - 1 == Z.dim:
            return SimplicityResult(
                SIMPLE, None, f"center is a field, generated by a root of {format_poly(m)}", A.field
            )
    return SimplicityResult(INDETERMINATE, None, "no center element decided the field test", A.field)
