"""Arithmetic in Q[x]/(f) for an irreducible f of small degree."""
from __future__ import annotations

from fractions import Fraction

from ..errors import DegreeCapExceeded
from ..seriesalg.poly import RatPoly

MAX_FIELD_DEGREE = 4


class NumberField:
    def __init__(self, minpoly: RatPoly, cap: int = MAX_FIELD_DEGREE):
        if minpoly.degree < 1:
            raise ValueError("defining polynomial must be non-constant")
        if minpoly.degree > cap:
            raise DegreeCapExceeded(f"field degree {minpoly.degree} exceeds the cap {cap}")
        self.minpoly = minpoly.monic()

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            return value
        if isinstance(value, RatPoly):
            return NFElement(self, value % self.minpoly)
        return NFElement(self, RatPoly.const(value))

    def generator(self) -> "NFElement":
        return self(RatPoly.x())

    def __repr__(self):
        return f"NumberField({self.minpoly.to_string('x')})"


class NFElement:
    __slots__ = ("field", "poly")

    def __init__(self, field: NumberField, poly: RatPoly):
        self.field = field
        self.poly = poly

    def _lift(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, RatPoly.const(other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, -self.poly)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return NFElement(self.field, (self.poly * other.poly) % self.field.minpoly)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a number field")
        # extended Euclid: s*poly + t*f = 1
        r0, r1 = self.field.minpoly, self.poly
        s0, s1 = RatPoly(), RatPoly.const(1)
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        return NFElement(self.field, (s0 / r0.lc) % self.field.minpoly)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = NFElement(self.field, RatPoly.const(1)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.poly == other.poly

    def __hash__(self):
        return hash((self.field, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.poly[0]

    def __repr__(self):
        return f"[{self.poly.to_string('a')}]"


def nf_poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Division of polynomials (low degree first) with number-field coefficients."""
    rem = list(num)
    while rem and rem[-1] == 0:
        rem.pop()
    d = list(den)
    while d and d[-1] == 0:
        d.pop()
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = 1 / d[-1] if not isinstance(d[-1], (int, Fraction)) else Fraction(1) / d[-1]
    quo = [0] * max(len(rem) - len(d) + 1, 0)
    for k in range(len(rem) - len(d), -1, -1):
        c = rem[k + len(d) - 1] * inv
        quo[k] = c
        for j, b in enumerate(d):
            rem[k + j] = rem[k + j] - c * b
    rem = rem[: len(d) - 1]
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem
