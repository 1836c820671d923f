"""Dense univariate polynomials and rational functions over Q."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


class RatPoly:
    """Polynomial with exact rational coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    # construction helpers
    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "RatPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-_frac(r), 1))
        return p

    # basic properties
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # arithmetic
    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = RatPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "RatPoly"):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                quo[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return RatPoly(quo), RatPoly(rem[:dq] if dq > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __truediv__(self, c):
        return self * (1 / _frac(c))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # transformations
    def derivative(self) -> "RatPoly":
        return RatPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def shift(self, a) -> "RatPoly":
        """p(x + a)."""
        a = _frac(a)
        out = RatPoly()
        xa = RatPoly((a, 1))
        for c in reversed(self.coeffs):
            out = out * xa + c
        return out

    def scale(self, c) -> "RatPoly":
        """p(c*x)."""
        c = _frac(c)
        return RatPoly(a * c**k for k, a in enumerate(self.coeffs))

    def reflect(self) -> "RatPoly":
        """p(-x)."""
        return self.scale(-1)

    def monic(self) -> "RatPoly":
        return self / self.lc if self.coeffs else self

    def valuation(self) -> int:
        """Order of vanishing at 0 (the zero polynomial returns a large sentinel)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 10**9

    def content_and_primitive(self) -> tuple[Fraction, "RatPoly"]:
        """Split p = content * q with q integral, content 1 and positive leading coefficient."""
        if not self.coeffs:
            return Fraction(0), self
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        prim = RatPoly(v // g for v in ints)
        return Fraction(g, den), prim

    def integer_coeffs(self) -> list[int]:
        return [int(c) for c in self.content_and_primitive()[1].coeffs]

    def multiplicity(self, f: "RatPoly") -> int:
        """Largest m with f^m dividing self (f non-constant)."""
        if self.is_zero():
            return 10**9
        m, p = 0, self
        while True:
            q, r = divmod(p, f)
            if not r.is_zero():
                return m
            m, p = m + 1, q

    # output
    def to_string(self, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"RatPoly({self.to_string('x')})"


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: RatPoly, b: RatPoly) -> RatPoly:
    if a.is_zero() or b.is_zero():
        return RatPoly()
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def falling_factorial_poly(k: int) -> RatPoly:
    """x (x-1) ... (x-k+1)."""
    return RatPoly.from_roots(range(k))


def factor_over_q(p: RatPoly) -> tuple[Fraction, list[tuple[RatPoly, int]]]:
    """Irreducible factorisation over Q: p = const * prod(f_i^m_i), f_i monic.

    Backed by sympy's factor_list.
    """
    import sympy

    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree == 0:
        return p.lc, []
    x = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], x, domain="QQ")
    const, facs = sp.factor_list()
    out = []
    lead = Fraction(int(sympy.numer(const)), int(sympy.denom(const)))
    for f, m in facs:
        coeffs = [Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in reversed(f.all_coeffs())]
        fp = RatPoly(coeffs)
        lead *= fp.lc**m
        out.append((fp.monic(), m))
    out.sort(key=lambda fm: (fm[0].degree, [abs(c) for c in fm[0].coeffs], fm[0].coeffs))
    return lead, out


def rational_roots(p: RatPoly) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities, sorted."""
    _, facs = factor_over_q(p)
    return sorted((-f.coeffs[0], m) for f, m in facs if f.degree == 1)


class RatFunc:
    """Quotient of RatPolys in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, RatPoly) else RatPoly.const(num)
        den = RatPoly.const(1) if den is None else (den if isinstance(den, RatPoly) else RatPoly.const(den))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = RatPoly(), RatPoly.const(1)
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num, self.den = num / lc, den / lc

    @classmethod
    def x(cls) -> "RatFunc":
        return cls(RatPoly.x())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (RatPoly, int, Fraction)):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k >= 0:
            return RatFunc(self.num**k, self.den**k)
        return RatFunc(self.den ** (-k), self.num ** (-k))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def order_at(self, f: RatPoly) -> int:
        """Valuation along the irreducible polynomial f."""
        return self.num.multiplicity(f) - self.den.multiplicity(f)

    def order_at_zero(self) -> int:
        return self.num.valuation() - self.den.valuation()

    def order_at_infinity(self) -> int:
        """ord_inf(f) = deg(den) - deg(num)."""
        return self.den.degree - self.num.degree

    def __repr__(self):
        if self.is_polynomial():
            return f"RatFunc({self.num.to_string('t')})"
        return f"RatFunc(({self.num.to_string('t')}) / ({self.den.to_string('t')}))"
