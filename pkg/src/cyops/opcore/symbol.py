"""Singular points, local exponents, Fuchs criterion and Riemann symbols."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..errors import IrregularPoint, NonFuchsian
from ..seriesalg.poly import RatFunc, RatPoly, factor_over_q, falling_factorial_poly
from .diffop import DiffOperator, theta_to_d
from .numberfield import NumberField, NFElement, nf_poly_divmod
from .points import INFINITY, AlgebraicLocus, Infinity, RationalPoint, point_from_factor
from .theta import ThetaOperator, reciprocal_transform


@dataclass(frozen=True)
class IrrationalExponent:
    """An exponent given by its minimal polynomial over Q."""

    minpoly: RatPoly

    def __str__(self):
        return f"root({self.minpoly.content_and_primitive()[1].to_string('x')})"


Exponent = Union[Fraction, IrrationalExponent]


def _split_off(p: RatPoly, f: RatPoly) -> tuple[int, RatPoly]:
    """Return (m, q) with p = f^m q and f not dividing q."""
    m = 0
    while True:
        q, r = divmod(p, f)
        if not r.is_zero():
            return m, p
        p, m = q, m + 1


def _leading_term(a: RatFunc, f: RatPoly, K: NumberField) -> tuple[int, NFElement]:
    """Order along f and leading local coefficient of a at a root of f.

    Writing a = f^k u/v and f(t) = (t - alpha) g(t) with g(alpha) = f'(alpha)
    gives a ~ (u/v)(alpha) f'(alpha)^k (t - alpha)^k.
    """
    kn, u = _split_off(a.num, f)
    kd, v = _split_off(a.den, f)
    alpha = K.generator()
    k = kn - kd
    lead = u(alpha) / v(alpha) * f.derivative()(alpha) ** k
    return k, lead


def indicial_at_factor(dop: DiffOperator, f: RatPoly) -> tuple[list[NFElement], bool, NumberField]:
    """Indicial polynomial (low degree first, coefficients in Q[x]/f) at the roots of f.

    Returns (coefficients, fuchsian_here, field).
    """
    K = NumberField(f)
    terms = []
    for i, a in enumerate(dop.coeffs):
        if a.is_zero():
            continue
        k, lead = _leading_term(a, f.monic(), K)
        terms.append((k - i, i, lead))
    mu = min(t[0] for t in terms)
    poly = [K(0)] * (dop.order + 1)
    top = 0
    for shift, i, lead in terms:
        if shift != mu:
            continue
        top = max(top, i)
        for j, c in enumerate(falling_factorial_poly(i).coeffs):
            poly[j] = poly[j] + lead * c
    while len(poly) > 1 and poly[-1].is_zero():
        poly.pop()
    return poly, top == dop.order, K


def _roots_of_indicial(coeffs: list[NFElement], K: NumberField) -> list[Exponent]:
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    out: list[Exponent] = []
    if all(c.is_rational() for c in monic):
        p = RatPoly(c.to_fraction() for c in monic)
        _, facs = factor_over_q(p)
        for g, m in facs:
            if g.degree == 1:
                out.extend([-g.coeffs[0]] * m)
            else:
                out.extend([IrrationalExponent(g)] * (m * g.degree))
        return _sort_exponents(out)
    # coefficients genuinely in K: take the norm and test its rational roots over K
    import sympy

    x, lam = sympy.symbols("x lam")
    fx = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(K.minpoly.coeffs))
    P = sum(sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(e.poly.coeffs)) * lam**j
            for j, e in enumerate(monic))
    norm = sympy.Poly(sympy.resultant(fx, P, x), lam)
    normp = RatPoly(Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in reversed(norm.all_coeffs()))
    _, facs = factor_over_q(normp)
    remaining = monic
    for g, _m in facs:
        if g.degree != 1:
            continue
        r = -g.coeffs[0]
        lin = [K(-r), K(1)]
        while len(remaining) > 1:
            q, rem = nf_poly_divmod(remaining, lin)
            if rem:
                break
            out.append(r)
            remaining = q
    left = len(remaining) - 1
    irr = [g for g, _ in facs if g.degree > 1]
    for k in range(left):
        out.append(IrrationalExponent(irr[k % len(irr)] if irr else RatPoly((0, 1))))
    return _sort_exponents(out)


def _sort_exponents(exps: list[Exponent]) -> list[Exponent]:
    rat = sorted(e for e in exps if isinstance(e, Fraction))
    irr = [e for e in exps if not isinstance(e, Fraction)]
    return rat + irr


def local_exponents(op: ThetaOperator, p) -> list[Exponent]:
    """Exponents (with multiplicity) at a point descriptor, a rational number, or infinity."""
    if not isinstance(p, (RationalPoint, AlgebraicLocus, Infinity)):
        p = RationalPoint(p)
    if isinstance(p, Infinity):
        op = reciprocal_transform(op)
        f = RatPoly.x()
    else:
        f = p.minpoly
    dop = theta_to_d(op)
    coeffs, fuchsian, K = indicial_at_factor(dop, f)
    if not fuchsian:
        raise IrregularPoint(f"indicial degree {len(coeffs) - 1} below order {dop.order} at {p}")
    return _roots_of_indicial(coeffs, K)


@dataclass(frozen=True)
class FuchsReport:
    fuchsian: bool
    failures: tuple = ()


def _ratio_poles(dop: DiffOperator) -> list[RatPoly]:
    """Irreducible (monic) factors appearing in denominators of a_i/a_n."""
    lead = dop.coeffs[-1]
    seen: list[RatPoly] = []
    for a in dop.coeffs[:-1]:
        if a.is_zero():
            continue
        r = a / lead
        if r.den.degree == 0:
            continue
        for g, _ in factor_over_q(r.den)[1]:
            if g not in seen:
                seen.append(g)
    return seen


def fuchs_check(dop: DiffOperator) -> FuchsReport:
    """Check ord_p(a_i/a_n) >= -(n-i) at every finite pole and ord_oo(a_i/a_n) >= n-i."""
    n = dop.order
    lead = dop.coeffs[-1]
    failures = []
    for f in _ratio_poles(dop):
        for i, a in enumerate(dop.coeffs[:-1]):
            if a.is_zero():
                continue
            if (a / lead).order_at(f) < -(n - i):
                failures.append((point_from_factor(f), i))
    for i, a in enumerate(dop.coeffs[:-1]):
        if not a.is_zero() and (a / lead).order_at_infinity() < n - i:
            failures.append((INFINITY, i))
    return FuchsReport(not failures, tuple(failures))


def infinity_is_singular(op: ThetaOperator) -> bool:
    rec = theta_to_d(reciprocal_transform(op))
    return any(g == RatPoly.x() for g in _ratio_poles(rec))


@dataclass(frozen=True)
class SymbolColumn:
    point: object
    exponents: tuple
    weight: int  # number of geometric points the column stands for

    @property
    def exponent_sum(self) -> Fraction | None:
        if all(isinstance(e, Fraction) for e in self.exponents):
            return sum(self.exponents, Fraction(0))
        return None

    @property
    def rational(self) -> bool:
        return all(isinstance(e, Fraction) for e in self.exponents)

    @property
    def apparent_candidate(self) -> bool:
        """Distinct integer exponents: a heuristic flag only, never a certificate."""
        ints = [e for e in self.exponents if isinstance(e, Fraction) and e.denominator == 1]
        return len(ints) == len(self.exponents) and len(set(ints)) == len(ints)


@dataclass(frozen=True)
class RiemannSymbol:
    order: int
    columns: tuple = field(default_factory=tuple)

    def column(self, point) -> SymbolColumn:
        if not isinstance(point, (RationalPoint, AlgebraicLocus, Infinity)):
            point = RationalPoint(point)
        for c in self.columns:
            if c.point == point:
                return c
        raise KeyError(point)

    def points(self) -> list:
        return [c.point for c in self.columns]

    def as_dict(self) -> dict:
        return {c.point: list(c.exponents) for c in self.columns}

    def singular_point_count(self) -> int:
        return sum(c.weight for c in self.columns)

    def fuchs_total(self) -> Fraction:
        return sum((c.exponent_sum * c.weight for c in self.columns), Fraction(0))

    def fuchs_expected(self) -> Fraction:
        n = self.order
        return Fraction(n * (n - 1), 2) * (self.singular_point_count() - 2)

    def fuchs_relation_holds(self) -> bool:
        if not all(c.rational for c in self.columns):
            return False
        return self.fuchs_total() == self.fuchs_expected()

    def to_text(self) -> str:
        lines = []
        for c in self.columns:
            exps = ", ".join(str(e) for e in c.exponents)
            lines.append(f"{c.point}: {exps}")
        return "\n".join(lines)


def riemann_symbol(op: ThetaOperator) -> RiemannSymbol:
    dop = theta_to_d(op)
    report = fuchs_check(dop)
    if not report.fuchsian:
        raise NonFuchsian("operator is not Fuchsian: " + ", ".join(f"{p}[{i}]" for p, i in report.failures))
    cols = []
    for f in _ratio_poles(dop):
        pt = point_from_factor(f)
        coeffs, ok, K = indicial_at_factor(dop, f)
        if not ok:
            raise NonFuchsian(f"indicial degree drops at {pt}")
        cols.append(SymbolColumn(pt, tuple(_roots_of_indicial(coeffs, K)), f.degree))
    cols.sort(key=lambda c: c.point.sort_key())
    if infinity_is_singular(op):
        cols.append(SymbolColumn(INFINITY, tuple(local_exponents(op, INFINITY)), 1))
    return RiemannSymbol(dop.order, tuple(cols))
