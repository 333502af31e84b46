"""Exact scalars: rationals and Gaussian rationals.

Rationals are plain ``int`` or ``fractions.Fraction`` (integral values are
kept as ``int`` for speed).  Gaussian rationals are :class:`Gaussian`.
Nothing here ever touches floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

RATIONAL = "rational"
GAUSSIAN = "gaussian"
FIELDS = (RATIONAL, GAUSSIAN)

Rational = Union[int, Fraction]


def _q(x) -> Rational:
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _q(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


class Gaussian:
    """``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _q(re))
        object.__setattr__(self, "im", _q(im))

    def __setattr__(self, *_):
        raise AttributeError("Gaussian is immutable")

    @staticmethod
    def _parts(x):
        if isinstance(x, Gaussian):
            return x.re, x.im
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return x, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        return Gaussian(self.re * a - self.im * b, self.re * b + self.im * a)

    __rmul__ = __mul__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def norm(self) -> Rational:
        return _q(self.re * self.re + self.im * self.im)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = p
        d = Fraction(a * a + b * b)
        if d == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        return Gaussian((self.re * a + self.im * b) / d, (self.im * a - self.re * b) / d)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return Gaussian(*p) / self

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


I = Gaussian(0, 1)

Scalar = Union[int, Fraction, Gaussian]


def clean(x) -> Scalar:
    """Normalize a scalar: integral Fractions become ints."""
    if isinstance(x, Gaussian):
        return x
    return _q(x)


def coerce(x, field: str) -> Scalar:
    """Convert ``x`` into the canonical representation for ``field``."""
    if field == RATIONAL:
        if isinstance(x, Gaussian):
            if x.im != 0:
                raise ValueError(f"{x} is not rational")
            return x.re
        return _q(x)
    if field == GAUSSIAN:
        return x if isinstance(x, Gaussian) else Gaussian(_q(x), 0)
    raise ValueError(f"unknown field {field!r}")


def zero(field: str) -> Scalar:
    return coerce(0, field)


def one(field: str) -> Scalar:
    return coerce(1, field)


def inverse(x: Scalar) -> Scalar:
    if isinstance(x, Gaussian):
        return 1 / x
    return clean(Fraction(1) / x)


def div(a: Scalar, b: Scalar) -> Scalar:
    """Exact quotient; never falls back to float division."""
    if isinstance(a, Gaussian) or isinstance(b, Gaussian):
        return Gaussian(*Gaussian._parts(a)) / b
    return clean(Fraction(a) / b)


def _rat_json(x: Rational) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _rat_from_json(obj) -> Rational:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ValueError(f"bad rational {obj!r}")
    num, den = obj["num"], obj["den"]
    if not isinstance(num, int) or not isinstance(den, int) or den <= 0:
        raise ValueError(f"bad rational {obj!r}")
    return _q(Fraction(num, den))


def to_json(x: Scalar, field: str):
    x = coerce(x, field)
    if field == RATIONAL:
        return _rat_json(x)
    return {"re": _rat_json(x.re), "im": _rat_json(x.im)}


def from_json(obj, field: str) -> Scalar:
    if field == RATIONAL:
        return _rat_from_json(obj)
    if field == GAUSSIAN:
        if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
            raise ValueError(f"bad gaussian scalar {obj!r}")
        return Gaussian(_rat_from_json(obj["re"]), _rat_from_json(obj["im"]))
    raise ValueError(f"unknown field {field!r}")


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Gaussian):
        if x.im == 0:
            return str(x.re)
        if x.re == 0:
            return {1: "i", -1: "-i"}.get(x.im, f"{x.im}i")
        sign = "+" if x.im > 0 else "-"
        im = abs(x.im)
        return f"{x.re}{sign}{'' if im == 1 else im}i"
    return str(x)


def format_term(coef: Scalar, label: str) -> str:
    """Render ``coef * label`` with an explicit leading sign, e.g. ``-k`` or ``+1/2*a1``."""
    if isinstance(coef, Gaussian) and coef.im == 0:
        coef = coef.re
    if isinstance(coef, Gaussian):
        if coef.re == 0 and coef.im in (1, -1):
            return ("+" if coef.im == 1 else "-") + "i*" + label
        return f"+({format_scalar(coef)})*{label}"
    if coef == 1:
        return "+" + label
    if coef == -1:
        return "-" + label
    sign = "+" if coef > 0 else "-"
    return f"{sign}{abs(coef)}*{label}"


_COEF_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Rational:
    if not _COEF_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return _q(Fraction(text))
