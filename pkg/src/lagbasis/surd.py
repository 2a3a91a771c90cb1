# module surd
"""Exact values of the form (rational) × √(positive integer).

Every closed-form matrix element in this package at unit radial scale is of
this shape, so a Surd carries it losslessly.  The canonical form keeps the
radicand a square-free positive integer (denominators are rationalized into
the coefficient), which makes equality, rendering, and parsing unambiguous.

The ASCII rendering grammar is ``<sign><p>/<q>*sqrt(<r>/<s>)``, e.g. the
value √3/2 renders as ``1/2*sqrt(3/1)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

_SURD_RE = re.compile(r"^(-?)(\d+)/(\d+)\*sqrt\((\d+)/(\d+)\)$")

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def _square_free_split(n: int) -> tuple[int, int]:
    """Split positive n into (s, f) with n = s²·f and f square-free.

    Trial division; radicands here are built from factorials of modest
    integers, so all prime factors are small.
    """
    if n <= 0:
        raise ValueError(f"expected positive integer, got {n}")
    s = 1
    f = 1
    for p in _SMALL_PRIMES:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    p = 17
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 2
    if n > 1:
        root = math.isqrt(n)
        if root * root == n:
            s *= root
        else:
            f *= n
    return s, f


@dataclass(frozen=True)
class Surd:
    """Canonical exact value coefficient·√(radicand).

    Invariants: ``radicand`` is a square-free positive integer; a zero value
    is stored as coefficient 0 with radicand 1.
    """

    coefficient: Fraction
    radicand: int

    @classmethod
    def of(cls, coefficient: "Fraction | int", radicand: "Fraction | int" = 1) -> "Surd":
        """Build the canonical Surd equal to coefficient·√(radicand)."""
        coeff = Fraction(coefficient)
        rad = Fraction(radicand)
        if rad < 0:
            raise ValueError(f"radicand must be positive, got {rad}")
        if coeff == 0 or rad == 0:
            return cls(Fraction(0), 1)
        # √(a/b) = √(a·b)/b, then pull squares out of the integer radicand.
        a, b = rad.numerator, rad.denominator
        s, f = _square_free_split(a * b)
        return cls(coeff * Fraction(s, b), f)

    def to_real(self) -> float:
        if self.coefficient == 0:
            return 0.0
        return float(self.coefficient) * math.sqrt(self.radicand)

    def __mul__(self, other: "Surd | Fraction | int") -> "Surd":
        if isinstance(other, Surd):
            return Surd.of(self.coefficient * other.coefficient,
                           Fraction(self.radicand * other.radicand))
        return Surd.of(self.coefficient * Fraction(other), Fraction(self.radicand))

    __rmul__ = __mul__

    def __add__(self, other: "Surd") -> "Surd":
        if self.coefficient == 0:
            return other
        if other.coefficient == 0:
            return self
        if self.radicand != other.radicand:
            raise ValueError(
                f"cannot add surds with radicands {self.radicand} and {other.radicand}")
        return Surd.of(self.coefficient + other.coefficient, self.radicand)

    def __neg__(self) -> "Surd":
        return Surd(-self.coefficient, self.radicand)

    def render(self) -> str:
        """Render as ``<sign><p>/<q>*sqrt(<r>/1)``."""
        c = self.coefficient
        sign = "-" if c < 0 else ""
        return f"{sign}{abs(c.numerator)}/{c.denominator}*sqrt({self.radicand}/1)"

    @classmethod
    def parse(cls, text: str) -> "Surd":
        m = _SURD_RE.match(text.strip())
        if not m:
            raise ValueError(f"not a surd rendering: {text!r}")
        sign, p, q, r, s = m.groups()
        coeff = Fraction(int(p), int(q))
        if sign == "-":
            coeff = -coeff
        return cls.of(coeff, Fraction(int(r), int(s)))


ZERO = Surd(Fraction(0), 1)
