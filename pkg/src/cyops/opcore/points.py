"""Descriptors for points of the projective line."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..seriesalg.poly import RatPoly


@dataclass(frozen=True)
class RationalPoint:
    value: Fraction

    def __init__(self, value):
        object.__setattr__(self, "value", Fraction(value))

    @property
    def minpoly(self) -> RatPoly:
        return RatPoly((-self.value, 1))

    def sort_key(self):
        return (0, abs(self.value), self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class AlgebraicLocus:
    """All roots of an irreducible polynomial of degree >= 2, as one column."""

    minpoly: RatPoly

    def __init__(self, minpoly: RatPoly):
        if minpoly.degree < 2:
            raise ValueError("algebraic locus needs a polynomial of degree at least 2")
        object.__setattr__(self, "minpoly", minpoly.monic())

    def sort_key(self):
        return (1, self.minpoly.degree, tuple(abs(c) for c in self.minpoly.coeffs))

    def integer_minpoly(self) -> RatPoly:
        return self.minpoly.content_and_primitive()[1]

    def __str__(self):
        return f"roots({self.integer_minpoly().to_string('t')})"


@dataclass(frozen=True)
class Infinity:
    def sort_key(self):
        return (2,)

    def __str__(self):
        return "oo"


INFINITY = Infinity()

PointDescriptor = RationalPoint | AlgebraicLocus | Infinity


def point_from_factor(f: RatPoly) -> "RationalPoint | AlgebraicLocus":
    f = f.monic()
    if f.degree == 1:
        return RationalPoint(-f.coeffs[0])
    return AlgebraicLocus(f)


def parse_point(text: str) -> "PointDescriptor":
    text = text.strip()
    if text.lower() in ("oo", "inf", "infinity"):
        return INFINITY
    return RationalPoint(Fraction(text))
