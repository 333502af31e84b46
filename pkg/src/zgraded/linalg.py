"""Exact row reduction over the scalar fields.

Vectors are lists/tuples of exact scalars.  Everything is dense; the
algebras in scope have at most a few hundred basis elements.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .scalars import clean, inverse


def _scale(row, c):
    return [clean(c * x) if x else x for x in row]


def _axpy(row, c, other):
    # row - c * other
    return [clean(x - c * y) if y else x for x, y in zip(row, other)]


class Echelon:
    """Incrementally grown echelon basis with distinct pivots.

    Rows are normalized so the pivot entry is 1 and are kept sorted by pivot;
    reduction against the basis is exact.  ``track`` records, for each row,
    the combination of inserted vectors that produced it.
    """

    def __init__(self, width: int, track: bool = False):
        self.width = width
        self.rows: list[list] = []
        self.pivots: list[int] = []
        self.track = track
        self.combos: list[list] = []
        self._inserted = 0

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec, combo=None):
        v = list(vec)
        for row, p, cmb in zip(self.rows, self.pivots, self.combos if self.track else [None] * len(self.rows)):
            c = v[p]
            if c:
                v = _axpy(v, c, row)
                if combo is not None:
                    combo = _axpy(combo, c, cmb)
        return v, combo

    def contains(self, vec) -> bool:
        v, _ = self.reduce(vec)
        return not any(v)

    def add(self, vec) -> Optional[list]:
        """Insert ``vec``; return None if it was new, else the dependency.

        With tracking on, a dependent vector returns the coefficients ``c``
        (one per inserted vector so far, the last being this vector's 1) with
        ``sum c_k v_k = 0``.
        """
        combo = None
        if self.track:
            k = self._inserted
            combo = [0] * (k + 1)
            combo[k] = 1
            for cmb in self.combos:
                cmb.append(0)
        self._inserted += 1
        v, combo = self.reduce(vec, combo)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return combo if self.track else []
        inv = inverse(v[p])
        v = _scale(v, inv)
        if self.track:
            combo = _scale(combo, inv)
        pos = next((k for k, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, p)
        if self.track:
            self.combos.insert(pos, combo)
        return None

    def rref(self) -> list[list]:
        """Fully reduced rows, canonical for the spanned subspace."""
        rows = [list(r) for r in self.rows]
        for k in range(len(rows) - 1, -1, -1):
            p = self.pivots[k]
            for m in range(k):
                c = rows[m][p]
                if c:
                    rows[m] = _axpy(rows[m], c, rows[k])
        return rows


def rref(rows: Iterable[Sequence], width: int) -> tuple[list[list], list[int]]:
    e = Echelon(width)
    for r in rows:
        e.add(r)
    return e.rref(), list(e.pivots)


def rank(rows: Iterable[Sequence], width: int) -> int:
    return len(rref(rows, width)[1])


def nullspace(rows: Sequence[Sequence], width: int) -> list[list]:
    """Basis of ``{x : M x = 0}``, one vector per free column, in RREF-derived canonical form."""
    red, pivots = rref(rows, width)
    free = [c for c in range(width) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [0] * width
        x[f] = 1
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = clean(-row[f])
        basis.append(x)
    return basis


def solve_in_basis(basis_rows: Sequence[Sequence], targets: Sequence[Sequence]) -> list[list]:
    """Coordinates of each target in the (independent) basis rows.

    Raises ValueError if the basis is dependent or a target is outside its span.
    """
    width = len(basis_rows[0])
    e = Echelon(width, track=True)
    for r in basis_rows:
        if e.add(r) is not None:
            raise ValueError("basis is linearly dependent")
    k = len(basis_rows)
    out = []
    for t in targets:
        combo = [0] * k
        v, combo = e.reduce(t, combo)
        if any(v):
            raise ValueError("target outside the span")
        # t - sum combo_j * (row combos) = 0, so coordinates are the combo negated
        out.append([clean(-c) for c in combo])
    return out
