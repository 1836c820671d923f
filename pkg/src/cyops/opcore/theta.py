"""Operators sum_i t^i P_i(Theta), Theta = t d/dt."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from ..errors import InputError, InsufficientTruncation
from ..seriesalg.poly import RatPoly
from ..seriesalg.qseries import QSeries


def _as_poly(p) -> RatPoly:
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return RatPoly.const(p)
    return RatPoly(p)


@dataclass(frozen=True)
class ThetaOperator:
    """Immutable Theta-form operator; ``polys[i]`` multiplies t^i."""

    polys: tuple[RatPoly, ...]

    def __init__(self, polys: Iterable):
        ps = [_as_poly(p) for p in polys]
        while ps and ps[-1].is_zero():
            ps.pop()
        if not ps:
            raise InputError("the zero operator is not allowed")
        if max(p.degree for p in ps) < 1:
            raise InputError("operator order must be at least 1")
        object.__setattr__(self, "polys", tuple(ps))

    @classmethod
    def theta_power(cls, n: int) -> "ThetaOperator":
        return cls([RatPoly.x() ** n])

    @property
    def order(self) -> int:
        return max(p.degree for p in self.polys)

    @property
    def degree(self) -> int:
        return len(self.polys) - 1

    def P(self, i: int) -> RatPoly:
        return self.polys[i] if 0 <= i < len(self.polys) else RatPoly()

    # normal forms
    def canonical(self) -> "ThetaOperator":
        """Integer coefficients, content 1, positive leading coefficient of the first nonzero P_i."""
        coeffs = [c for p in self.polys for c in p.coeffs]
        den = reduce(lcm, (c.denominator for c in coeffs), 1)
        num = reduce(gcd, (int(c * den) for c in coeffs), 0)
        first = next(p for p in self.polys if not p.is_zero())
        scale = Fraction(den, num)
        if first.lc < 0:
            scale = -scale
        return ThetaOperator(p * scale for p in self.polys)

    def strip_t(self) -> "ThetaOperator":
        """Remove a common left factor t^j (leading zero P_i)."""
        j = next(k for k, p in enumerate(self.polys) if not p.is_zero())
        return ThetaOperator(self.polys[j:]) if j else self

    def equivalent(self, other: "ThetaOperator") -> bool:
        """Equal up to a rational constant and a left power of t."""
        return self.strip_t().canonical() == other.strip_t().canonical()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for p in self.polys for c in p.coeffs)

    # algebra
    def __mul__(self, other: "ThetaOperator") -> "ThetaOperator":
        """Composition self * other; t^i P(Theta) t^j R(Theta) = t^(i+j) P(Theta+j) R(Theta)."""
        out = [RatPoly()] * (self.degree + other.degree + 1)
        for i, p in enumerate(self.polys):
            for j, r in enumerate(other.polys):
                out[i + j] = out[i + j] + p.shift(j) * r
        return ThetaOperator(out)

    def __add__(self, other: "ThetaOperator") -> "ThetaOperator":
        n = max(len(self.polys), len(other.polys))
        return ThetaOperator(self.P(i) + other.P(i) for i in range(n))

    def scale(self, c) -> "ThetaOperator":
        return ThetaOperator(p * Fraction(c) for p in self.polys)

    # action on series
    def apply(self, s: QSeries) -> QSeries:
        return apply_operator(self, s)

    def apply_monomial(self, k) -> dict[Fraction, Fraction]:
        """Image of t^k as {exponent: coefficient}."""
        k = Fraction(k)
        out = {}
        for i, p in enumerate(self.polys):
            v = p(k)
            if v:
                out[k + i] = v
        return out

    def to_string(self, var: str = "T") -> str:
        parts = []
        for i, p in enumerate(self.polys):
            if p.is_zero():
                continue
            body = p.to_string(var)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            parts.append(f"({body})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"ThetaOperator({self.to_string()})"


def apply_operator(op: ThetaOperator, s: QSeries) -> QSeries:
    """Coefficient m of the image is sum_i P_i(m-i) s_(m-i); exact to order s.trunc - degree."""
    r = op.degree
    if s.trunc < r:
        raise InsufficientTruncation(f"series order {s.trunc} below operator degree {r}")
    m_top = s.trunc - r
    out = []
    for m in range(m_top + 1):
        acc = Fraction(0)
        for i, p in enumerate(op.polys):
            if i > m:
                break
            c = s.coeffs[m - i]
            if c and not p.is_zero():
                acc += p(m - i) * c
        out.append(acc)
    return QSeries(out, m_top)


def reciprocal_transform(op: ThetaOperator) -> ThetaOperator:
    """Operator in the coordinate 1/t: reverse the P_i and replace Theta by -Theta."""
    return ThetaOperator(p.reflect() for p in reversed(op.polys)).canonical()


def rescale_coordinate(op: ThetaOperator, N) -> ThetaOperator:
    """P_i -> N^i P_i; if y(t) solves op then y(N t) solves the result."""
    N = Fraction(N)
    if N == 0:
        raise InputError("rescaling factor must be nonzero")
    return ThetaOperator(p * N**i for i, p in enumerate(op.polys)).canonical()


def shift_exponent(op: ThetaOperator, a) -> ThetaOperator:
    """Conjugate t^(-a) op t^a: solutions y become t^(-a) y."""
    return ThetaOperator(p.shift(Fraction(a)) for p in op.polys).canonical()


def power_pullback(op: ThetaOperator, k: int) -> ThetaOperator:
    """Operator satisfied by y(t^k): t^i P_i(Theta) becomes s^(k i) P_i(Theta_s / k)."""
    if k < 1:
        raise InputError("pullback exponent must be positive")
    out = [RatPoly()] * (k * op.degree + 1)
    inv = Fraction(1, k)
    for i, p in enumerate(op.polys):
        out[k * i] = p.scale(inv)
    return ThetaOperator(out).canonical()


def translate_point(op: ThetaOperator, p) -> ThetaOperator:
    """The operator in the coordinate s = t - p, in Theta_s-form."""
    from .diffop import d_to_theta, theta_to_d

    p = Fraction(p)
    if p == 0:
        return op.canonical()
    return d_to_theta(theta_to_d(op).translate(p))


def theta_operator_from_ints(rows: Sequence[Sequence[int]]) -> ThetaOperator:
    """Build from coefficient lists (low Theta-degree first)."""
    return ThetaOperator(RatPoly(r) for r in rows)
