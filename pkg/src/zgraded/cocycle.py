"""Sign-valued 2-cocycles on (Z2)^n.

A cocycle here is ``F(a, b) = (-1)**f(a, b)`` for an exponent ``f``.  When
``f`` comes from a bilinear form the cocycle identity holds automatically;
arbitrary exponent callables are accepted too so that non-cocycles can be
planted and caught.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from ._common import CapExceeded, DimensionMismatch, Report
from .z2group import MAX_DIM, GroupElement, _check_dim, dot_bits

MAX_COCYCLE_DIM = 8


@dataclass(frozen=True)
class BilinearFormZ2:
    """``f(a, b) = sum m[i][j] a_i b_j mod 2``; ``rows[i]`` is the bit mask of row i."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        _check_dim(self.n, MAX_DIM)
        if len(self.rows) != self.n or any(r < 0 or r >> self.n for r in self.rows):
            raise ValueError("form rows must be n masks of n bits")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "BilinearFormZ2":
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise ValueError("form matrix must be square")
        rows = []
        for row in matrix:
            if any(x not in (0, 1) for x in row):
                raise ValueError("form entries must be 0/1")
            rows.append(sum(x << j for j, x in enumerate(row)))
        return cls(n, tuple(rows))

    @classmethod
    def zero(cls, n: int) -> "BilinearFormZ2":
        return cls(n, (0,) * n)

    def matrix(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def combine(self, a: int) -> int:
        # mask c with f(a, b) = <c, b>
        c = 0
        i = 0
        while a:
            if a & 1:
                c ^= self.rows[i]
            a >>= 1
            i += 1
        return c

    def __call__(self, a: int, b: int) -> int:
        return dot_bits(self.combine(a), b)


def f_standard(n: int) -> BilinearFormZ2:
    """The sign-rule form ``f(a, b) = sum_{i > j} a_i b_j``."""
    _check_dim(n, MAX_DIM)
    return BilinearFormZ2(n, tuple((1 << i) - 1 for i in range(n)))


@dataclass(frozen=True)
class SignCocycle:
    """Candidate cocycle ``(-1)**exponent(a, b)`` on packed group elements.

    ``form`` is set when the exponent is bilinear; ``exponent`` may be any
    callable on ints for planted counterexamples.
    """

    n: int
    exponent: Callable[[int, int], int] = field(compare=False)
    form: Optional[BilinearFormZ2] = None
    name: str = ""

    @classmethod
    def from_form(cls, form: BilinearFormZ2, name: str = "") -> "SignCocycle":
        return cls(form.n, form, form, name)

    @classmethod
    def standard(cls, n: int) -> "SignCocycle":
        return cls.from_form(f_standard(n), "standard")

    def sign(self, a: int, b: int) -> int:
        return -1 if self.exponent(a, b) & 1 else 1

    def exponent_table(self) -> np.ndarray:
        """Table ``T[a, b]`` of exponent bits over the whole group."""
        size = 1 << self.n
        if self.form is not None:
            combos = np.array([self.form.combine(a) for a in range(size)], dtype=np.int64)
            b = np.arange(size, dtype=np.int64)
            anded = combos[:, None] & b[None, :]
            # parity of popcount via xor folding
            for shift in (32, 16, 8, 4, 2, 1):
                anded ^= anded >> shift
            return (anded & 1).astype(np.uint8)
        return np.array(
            [[self.exponent(a, b) & 1 for b in range(size)] for a in range(size)], dtype=np.uint8
        )


def _bits(g, n: int) -> int:
    if isinstance(g, GroupElement):
        if g.n != n:
            raise DimensionMismatch(f"dimensions differ: {g.n} vs {n}")
        return g.bits
    return g


def eval_sign(F: SignCocycle, a, b) -> int:
    return F.sign(_bits(a, F.n), _bits(b, F.n))


def beta_of(F: SignCocycle, a, b) -> int:
    """Commutation factor ``F(a, b) / F(b, a)``; signs are involutive so this is a product."""
    a, b = _bits(a, F.n), _bits(b, F.n)
    return F.sign(a, b) * F.sign(b, a)


def is_cocycle(F: SignCocycle) -> Report:
    """Exhaustively check ``F(a+b, c) F(a, b) = F(a, b+c) F(b, c)`` over all triples.

    On failure the witness is the lexicographically first ``(a, b, c)`` as
    GroupElements.
    """
    if F.n > MAX_COCYCLE_DIM:
        raise CapExceeded(f"is_cocycle is exhaustive; n={F.n} exceeds cap {MAX_COCYCLE_DIM}")
    size = 1 << F.n
    T = F.exponent_table()
    idx = np.arange(size)
    for a in range(size):
        # bad[b, c] = f(a+b, c) + f(a, b) + f(a, b+c) + f(b, c) mod 2
        bad = (
            T[a ^ idx]
            ^ T[a][:, None]
            ^ T[a][idx[:, None] ^ idx[None, :]]
            ^ T
        )
        if bad.any():
            b, c = divmod(int(np.argmax(bad.ravel())), size)
            witness = tuple(GroupElement(F.n, x) for x in (a, b, c))
            return Report(False, witness, "cocycle identity violated")
    return Report(True, message=f"{size ** 3} triples")


def cocycle_from_table(n: int, signs: dict[tuple[int, int], int], name: str = "") -> SignCocycle:
    """Wrap a finite sign table; pairs missing from the table read as exponent 0."""

    def exponent(a: int, b: int) -> int:
        return 1 if signs.get((a, b), 1) == -1 else 0

    return SignCocycle(n, exponent, None, name)


def is_cocycle_on(F: SignCocycle, elements: Sequence[int]) -> Report:
    """Cocycle identity restricted to a subgroup given by its packed elements."""
    elems = list(elements)
    members = set(elems)
    for a in elems:
        for b in elems:
            for c in elems:
                if a ^ b not in members or b ^ c not in members:
                    return Report(False, None, "elements are not closed under addition")
                lhs = F.exponent(a ^ b, c) + F.exponent(a, b)
                rhs = F.exponent(a, b ^ c) + F.exponent(b, c)
                if (lhs - rhs) & 1:
                    witness = tuple(GroupElement(F.n, x) for x in (a, b, c))
                    return Report(False, witness, "cocycle identity violated")
    return Report(True, message=f"{len(elems) ** 3} triples")
