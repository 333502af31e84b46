"""The group (Z2)^n packed into Python ints, with the standard scalar product.

Bit ``i`` of a word is coordinate ``i + 1`` of the printed tuple, so
``(0,1,1)`` is the word ``0b110``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ._common import CapExceeded, DimensionMismatch

MAX_DIM = 62
MAX_ENUM_DIM = 20


def popcount(x: int) -> int:
    return bin(x).count("1")


def parity_bits(x: int) -> int:
    return popcount(x) & 1


def dot_bits(a: int, b: int) -> int:
    """Standard scalar product of two packed vectors, mod 2."""
    return popcount(a & b) & 1


def _check_dim(n: int, cap: int = MAX_DIM, low: int = 1) -> None:
    if not isinstance(n, int) or not low <= n <= cap:
        raise CapExceeded(f"dimension n={n!r} outside [{low}, {cap}]")


@dataclass(frozen=True, order=True)
class GroupElement:
    n: int
    bits: int

    def __post_init__(self):
        _check_dim(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} do not fit in dimension {self.n}")

    @classmethod
    def from_tuple(cls, coords) -> "GroupElement":
        coords = tuple(coords)
        if any(c not in (0, 1) for c in coords):
            raise ValueError(f"coordinates must be 0/1, got {coords}")
        return cls(len(coords), sum(c << i for i, c in enumerate(coords)))

    @classmethod
    def zero(cls, n: int) -> "GroupElement":
        return cls(n, 0)

    @classmethod
    def unit_vector(cls, n: int, i: int) -> "GroupElement":
        """The i-th standard basis vector, 1-indexed like the printed tuples."""
        if not 1 <= i <= n:
            raise ValueError(f"index {i} outside 1..{n}")
        return cls(n, 1 << (i - 1))

    def to_tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return gp_add(self, other)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.to_tuple()) + ")"


_TUPLE_RE = re.compile(r"\(([01](?:,[01])*)\)")


def parse(text: str) -> GroupElement:
    """Parse the exact text form ``(0,1,1)``; no whitespace is accepted."""
    m = _TUPLE_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a group element: {text!r}")
    return GroupElement.from_tuple(int(c) for c in m.group(1).split(","))


def _same_dim(a: GroupElement, b: GroupElement) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} vs {b.n}")


def gp_add(a: GroupElement, b: GroupElement) -> GroupElement:
    _same_dim(a, b)
    return GroupElement(a.n, a.bits ^ b.bits)


def scalar_product(a: GroupElement, b: GroupElement) -> int:
    _same_dim(a, b)
    return dot_bits(a.bits, b.bits)


def parity(a: GroupElement) -> int:
    return parity_bits(a.bits)


def enumerate_group(n: int) -> list[GroupElement]:
    """All 2**n elements in increasing bit-pattern order."""
    _check_dim(n, MAX_ENUM_DIM)
    return [GroupElement(n, b) for b in range(1 << n)]


def enumerate_even(n: int) -> list[GroupElement]:
    """The 2**(n-1) elements with an even number of 1-entries, in bit-pattern order."""
    _check_dim(n, MAX_ENUM_DIM, low=2)
    return [GroupElement(n, b) for b in range(1 << n) if not parity_bits(b)]
