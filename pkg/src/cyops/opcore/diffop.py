"""Operators sum_i a_i(t) (d/dt)^i with rational-function coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from sympy.functions.combinatorial.numbers import stirling

from ..errors import InputError
from ..seriesalg.poly import RatFunc, RatPoly, falling_factorial_poly, poly_lcm
from .theta import ThetaOperator


def _as_func(a) -> RatFunc:
    if isinstance(a, RatFunc):
        return a
    if isinstance(a, RatPoly):
        return RatFunc(a)
    if isinstance(a, (int, Fraction)):
        return RatFunc(RatPoly.const(a))
    return RatFunc(RatPoly(a))


@dataclass(frozen=True)
class DiffOperator:
    """``coeffs[i]`` multiplies (d/dt)^i; the top coefficient is nonzero."""

    coeffs: tuple[RatFunc, ...]

    def __init__(self, coeffs: Iterable):
        cs = [_as_func(a) for a in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        if not cs:
            raise InputError("the zero operator is not allowed")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def a(self, i: int) -> RatFunc:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else RatFunc(0)

    def monic(self) -> "DiffOperator":
        lead = self.coeffs[-1]
        return DiffOperator(a / lead for a in self.coeffs)

    def scale(self, f) -> "DiffOperator":
        """Left multiplication by a function."""
        f = _as_func(f)
        return DiffOperator(a * f for a in self.coeffs)

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        n = max(len(self.coeffs), len(other.coeffs))
        return DiffOperator(self.a(i) + other.a(i) for i in range(n))

    def __mul__(self, other: "DiffOperator") -> "DiffOperator":
        """Composition, using D^i b = sum_k C(i,k) b^(k) D^(i-k)."""
        out = [RatFunc(0)] * (self.order + other.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                deriv = b
                for k in range(i + 1):
                    if deriv.is_zero():
                        break
                    out[i + j - k] = out[i + j - k] + a * deriv * comb(i, k)
                    deriv = deriv.derivative()
        return DiffOperator(out)

    def translate(self, p) -> "DiffOperator":
        """Coefficients as functions of s = t - p."""
        p = Fraction(p)
        return DiffOperator(RatFunc(a.num.shift(p), a.den.shift(p)) for a in self.coeffs)

    def apply_monomial(self, k: int) -> RatFunc:
        """Image of t^k for an integer k >= 0."""
        total = RatFunc(0)
        for j, a in enumerate(self.coeffs):
            ff = falling_factorial_poly(j)(Fraction(k))
            if ff and k - j >= 0:
                total = total + a * RatFunc(RatPoly([0] * (k - j) + [ff]))
            elif ff:
                total = total + a * RatFunc(RatPoly.const(ff), RatPoly([0] * (j - k) + [1]))
        return total

    def __repr__(self):
        return "DiffOperator(" + ", ".join(repr(a) for a in self.coeffs) + ")"


def theta_to_d(op: ThetaOperator) -> DiffOperator:
    """Expand Theta^j = sum_k S(j,k) t^k D^k."""
    n = op.order
    coeffs = [RatPoly()] * (n + 1)
    for i, p in enumerate(op.polys):
        for j, c in enumerate(p.coeffs):
            if not c:
                continue
            for k in range(j + 1):
                s = int(stirling(j, k))
                if s:
                    coeffs[k] = coeffs[k] + RatPoly([0] * (i + k) + [c * s])
    return DiffOperator(RatFunc(c) for c in coeffs)


def d_to_theta(op: DiffOperator) -> ThetaOperator:
    """Rewrite via D^k = t^-k Theta(Theta-1)...(Theta-k+1), clearing minimally.

    The operator is multiplied on the left by the lcm of the coefficient
    denominators and by the least power t^m (m >= 0) making every term polynomial.
    """
    den = RatPoly.const(1)
    for a in op.coeffs:
        den = poly_lcm(den, a.den)
    polys = [(a.num * den).exact_div(a.den) for a in op.coeffs]
    m = max([k - p.valuation() for k, p in enumerate(polys) if not p.is_zero()] + [0])
    m = max(m, 0)
    top = max(p.degree + m - k for k, p in enumerate(polys) if not p.is_zero())
    out = [RatPoly()] * (top + 1)
    for k, p in enumerate(polys):
        if p.is_zero():
            continue
        ff = falling_factorial_poly(k)
        for e, c in enumerate(p.coeffs):
            if c:
                i = e + m - k
                out[i] = out[i] + ff * c
    return ThetaOperator(out).canonical()


def adjoint(op: DiffOperator) -> DiffOperator:
    """Formal adjoint sum_i (-D)^i a_i."""
    n = op.order
    out = [RatFunc(0)] * (n + 1)
    for i, a in enumerate(op.coeffs):
        # (-D)^i a = (-1)^i sum_k C(i,k) a^(i-k) D^k
        derivs = [a]
        for _ in range(i):
            derivs.append(derivs[-1].derivative())
        sign = -1 if i % 2 else 1
        for k in range(i + 1):
            term = derivs[i - k]
            if not term.is_zero():
                out[k] = out[k] + term * (sign * comb(i, k))
    return DiffOperator(out)


def multiplication_operator(f) -> DiffOperator:
    return DiffOperator([_as_func(f)])
