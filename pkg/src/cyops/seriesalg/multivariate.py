"""Sparse Laurent polynomials and total-degree truncated multivariate series."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import ZeroConstantDenominator

Exponent = tuple[int, ...]


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Finite sum of c * X^e with e an integer vector of length ``dim``."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Exponent, object] | Iterable = ()):
        self.dim = dim
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Exponent, Fraction] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != dim:
                raise ValueError(f"exponent {e} does not have length {dim}")
            v = out.get(e, Fraction(0)) + Fraction(c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        self.terms: dict[Exponent, Fraction] = out

    @classmethod
    def const(cls, dim: int, c=1) -> "LaurentPoly":
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def var(cls, dim: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * dim
        e[i] = power
        return cls(dim, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.dim, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.dim, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly(self.dim, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.dim, {e: -c for e, c in self.terms.items()})

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
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.dim, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return LaurentPoly(self.dim, {tuple(-x * -k for x in e): Fraction(1) / c ** (-k)})
        result, base = LaurentPoly.const(self.dim), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) != 1:
            raise ValueError("division only by a monomial or constant")
        return self * other ** -1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.dim, Fraction(0))

    def is_polynomial(self) -> bool:
        """All exponents non-negative."""
        return all(min(e, default=0) >= 0 for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def min_total_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=0)

    def embed(self, dim: int, positions: Iterable[int]) -> "LaurentPoly":
        """Relabel variable i as variable positions[i] in a larger ring."""
        pos = list(positions)
        out = {}
        for e, c in self.terms.items():
            f = [0] * dim
            for i, x in enumerate(e):
                f[pos[i]] += x
            out[tuple(f)] = out.get(tuple(f), 0) + c
        return LaurentPoly(dim, out)

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def to_string(self, names: list[str] | None = None) -> str:
        names = names or [f"X{i + 1}" for i in range(self.dim)]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), [-x for x in e])):
            c = self.terms[e]
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k >= 0 and k)
            negs = [n if k == -1 else f"{n}^{-k}" for n, k in zip(names, e) if k < 0]
            if not mono:
                body = str(abs(c)) if not negs else f"{abs(c)}"
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if negs:
                body += "/" + ("(" + "*".join(negs) + ")" if len(negs) > 1 else negs[0])
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self.to_string()})"


class MSeries:
    """Power series in ``dim`` variables, exact for total degree <= ``trunc``."""

    __slots__ = ("dim", "terms", "trunc")

    def __init__(self, dim: int, terms: Mapping[Exponent, object], trunc: int):
        self.dim = dim
        self.trunc = trunc
        self.terms: dict[Exponent, Fraction] = {}
        for e, c in terms.items():
            if sum(e) <= trunc and c:
                if min(e, default=0) < 0:
                    raise ValueError("power series exponents must be non-negative")
                self.terms[tuple(e)] = Fraction(c)

    @classmethod
    def from_laurent(cls, p: LaurentPoly, trunc: int) -> "MSeries":
        return cls(p.dim, p.terms, trunc)

    def __getitem__(self, e: Exponent) -> Fraction:
        if sum(e) > self.trunc:
            raise IndexError(f"exponent {e} beyond truncation {self.trunc}")
        return self.terms.get(tuple(e), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, MSeries):
            return NotImplemented
        return self.dim == other.dim and self.trunc == other.trunc and self.terms == other.terms

    def __add__(self, other: "MSeries") -> "MSeries":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MSeries(self.dim, out, min(self.trunc, other.trunc))

    def __neg__(self):
        return MSeries(self.dim, {e: -c for e, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "MSeries":
        if isinstance(other, LaurentPoly):
            other = MSeries.from_laurent(other, self.trunc)
        d = min(self.trunc, other.trunc)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            s1 = sum(e1)
            if s1 > d:
                continue
            for e2, c2 in other.terms.items():
                if s1 + sum(e2) <= d:
                    e = _add_exp(e1, e2)
                    out[e] = out.get(e, 0) + c1 * c2
        return MSeries(self.dim, out, d)

    def diagonal(self) -> list[Fraction]:
        """Coefficients of (k, ..., k) for k*dim <= trunc."""
        return [self.terms.get((k,) * self.dim, Fraction(0)) for k in range(self.trunc // self.dim + 1)]

    def __repr__(self):
        return f"MSeries(dim={self.dim}, trunc={self.trunc}, terms={len(self.terms)})"


def _exponents_by_degree(dim: int, d: int):
    """All non-negative exponent vectors of total degree exactly d."""
    if dim == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _exponents_by_degree(dim - 1, d - first):
            yield (first,) + rest


def mseries_expand_rational(P: LaurentPoly, Q: LaurentPoly, D: int) -> MSeries:
    """Expansion of P/Q to total degree D, for polynomial P, Q with Q(0) != 0.

    Uses F_e = (P_e - sum_{f != 0} Q_f F_{e-f}) / Q_0, the coefficient form of
    iterating the geometric series in (Q(0) - Q)/Q(0).
    """
    if P.dim != Q.dim:
        raise ValueError("numerator and denominator live in different rings")
    if not (P.is_polynomial() and Q.is_polynomial()):
        raise ValueError("numerator and denominator must have non-negative exponents")
    dim = P.dim
    zero = (0,) * dim
    q0 = Q.terms.get(zero, Fraction(0))
    if q0 == 0:
        raise ZeroConstantDenominator("denominator vanishes at the origin")
    inv = 1 / q0
    rest = [(f, c) for f, c in Q.terms.items() if f != zero]
    F: dict[Exponent, Fraction] = {}
    for d in range(D + 1):
        for e in _exponents_by_degree(dim, d):
            v = P.terms.get(e, Fraction(0))
            for f, c in rest:
                g = tuple(x - y for x, y in zip(e, f))
                if min(g) >= 0:
                    w = F.get(g)
                    if w:
                        v -= c * w
            if v:
                F[e] = v * inv
    return MSeries(dim, F, D)
