"""Bounded search for a (Z2)^m degree map making an algebra graded commutative.

The additive constraints ``deg i + deg j = deg k`` (for every nonzero
structure constant) are linear over GF(2), so they are solved first: every
degree becomes a fixed GF(2) combination of a few free vectors.  The sign
constraints ``<deg i, deg j> = s_ij`` then only involve those free vectors,
which are enumerated in bit-pattern order with pruning.

This is advisory: "none" means none exists with ``m <= max_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graded_algebra import GradedAlgebra, check_gamma_commutativity, check_grading
from .z2group import GroupElement, dot_bits, popcount

FOUND = "found"
NONE = "none"
OBSTRUCTION = "obstruction"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchResult:
    status: str
    m: Optional[int] = None
    degrees: tuple = ()
    witness: Optional[tuple] = None
    nodes: int = 0
    message: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def __str__(self):
        if self.status == FOUND:
            return f"found m={self.m} after {self.nodes} nodes"
        if self.status == OBSTRUCTION:
            return f"basis obstruction at {self.witness}: {self.message}"
        if self.status == NONE:
            return f"none within bound ({self.message})"
        return f"bound exhausted after {self.nodes} nodes"


def commutation_signs(A: GradedAlgebra):
    """Sign exponents ``s`` with ``b_i b_j = (-1)^s b_j b_i``.

    Returns ``(signs, None)`` where ``signs[i, j]`` is 0, 1 or None (both
    products vanish), or ``(None, (i, j))`` for the first pair that does
    not commute up to sign.
    """
    signs = {}
    for i in range(A.dim):
        for j in range(i, A.dim):
            ij, ji = A.table[i][j], A.table[j][i]
            if not ij and not ji:
                s = None
            elif ij == ji:
                s = 0
            elif ij == tuple((k, -c) for k, c in ji):
                s = 1
            else:
                return None, (i, j)
            signs[i, j] = s
    return signs, None


def _gf2_nullspace(rows: list[int], width: int) -> list[int]:
    """Nullspace basis of a GF(2) matrix whose rows are bit masks over ``width`` columns."""
    pivots: dict[int, int] = {}
    for r in rows:
        for p, pr in pivots.items():
            if r >> p & 1:
                r ^= pr
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for q in list(pivots):
            if pivots[q] >> p & 1:
                pivots[q] ^= r
        pivots[p] = r
    basis = []
    for f in range(width):
        if f in pivots:
            continue
        v = 1 << f
        for p, pr in pivots.items():
            if pr >> f & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def _gf2_consistent(equations: list[tuple[int, int]]) -> bool:
    """Whether the affine GF(2) system ``{mask . x = rhs}`` has a solution."""
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in equations:
        for p, (pm, pr) in pivots.items():
            if mask >> p & 1:
                mask ^= pm
                rhs ^= pr
        if not mask:
            if rhs:
                return False
            continue
        p = (mask & -mask).bit_length() - 1
        for q, (qm, qr) in list(pivots.items()):
            if qm >> p & 1:
                pivots[q] = (qm ^ mask, qr ^ rhs)
        pivots[p] = (mask, rhs)
    return True


def grading_search(A: GradedAlgebra, max_n: int, budget: int = 2_000_000) -> SearchResult:
    """First degree map ``basis -> (Z2)^m``, ``m <= max_n``, in deterministic order.

    The unit is forced into degree 0.  ``budget`` caps the number of search
    nodes; running out is reported as ``exhausted``, distinct from ``none``.
    """
    d = A.dim
    signs, bad = commutation_signs(A)
    if bad is not None:
        i, j = bad
        return SearchResult(
            OBSTRUCTION, witness=(A.labels[i], A.labels[j]),
            message=f"{A.labels[i]}*{A.labels[j]} is not +/- {A.labels[j]}*{A.labels[i]}",
        )

    # additive constraints as GF(2) rows over the d unknown degrees
    rows = {1 << k for k, c in enumerate(A.unit) if c}
    for i in range(d):
        for j in range(d):
            for k, _ in A.table[i][j]:
                r = (1 << i) ^ (1 << j) ^ (1 << k)
                if r:
                    rows.add(r)
    free = _gf2_nullspace(sorted(rows), d)
    r = len(free)
    # combo[i]: which free vectors sum to deg(b_i)
    combo = [sum(1 << a for a, v in enumerate(free) if v >> i & 1) for i in range(d)]

    constraints = sorted({(combo[i], combo[j], s) for (i, j), s in signs.items() if s is not None})
    gram_eqs = []
    for ci, cj, s in constraints:
        mask = 0
        for a in range(r):
            for b in range(a, r):
                if a == b:
                    coef = (ci >> a) & (cj >> a) & 1
                else:
                    coef = ((ci >> a) & (cj >> b) ^ (ci >> b) & (cj >> a)) & 1
                if coef:
                    mask |= 1 << (a * r + b)
        gram_eqs.append((mask, s))
    if not _gf2_consistent(gram_eqs):
        return SearchResult(NONE, message="sign constraints contradict the forced additive relations for every m")

    by_level: list[list[tuple[int, int, int]]] = [[] for _ in range(max(r, 1))]
    for ci, cj, s in constraints:
        top = (ci | cj).bit_length() - 1
        if top < 0:
            if s:
                return SearchResult(NONE, message="a degree-0 pair must anticommute")
            continue
        by_level[top].append((ci, cj, s))

    nodes = 0

    def deg_of(c, X):
        v = 0
        a = 0
        while c:
            if c & 1:
                v ^= X[a]
            c >>= 1
            a += 1
        return v

    for m in range(1, max_n + 1):
        X = [0] * r
        stack = [0]
        level = 0
        if r == 0:
            break
        # iterative DFS over X[level] in increasing bit-pattern order
        while stack:
            level = len(stack) - 1
            x = stack[-1]
            if x >= 1 << m:
                stack.pop()
                if stack:
                    stack[-1] += 1
                continue
            nodes += 1
            if nodes > budget:
                return SearchResult(EXHAUSTED, nodes=nodes)
            X[level] = x
            if all(dot_bits(deg_of(ci, X), deg_of(cj, X)) == s for ci, cj, s in by_level[level]):
                if level == r - 1:
                    degrees = tuple(GroupElement(m, deg_of(combo[i], X)) for i in range(d))
                    graded = A.with_degrees(m, degrees)
                    if not (check_grading(graded) and check_gamma_commutativity(graded)):
                        raise AssertionError("search produced a degree map the verifiers reject")
                    return SearchResult(FOUND, m, degrees, nodes=nodes)
                stack.append(0)
            else:
                stack[-1] += 1
    if r == 0:
        degrees = tuple(GroupElement(1, 0) for _ in range(d))
        graded = A.with_degrees(1, degrees)
        if check_grading(graded) and check_gamma_commutativity(graded):
            return SearchResult(FOUND, 1, degrees, nodes=nodes)
    return SearchResult(NONE, nodes=nodes, message=f"no assignment with m <= {max_n}")
