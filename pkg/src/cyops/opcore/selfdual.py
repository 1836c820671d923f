"""Self-duality: the order-four quantity Q and the alpha-function."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NonSimplePole, WrongOrder
from ..seriesalg.poly import RatFunc, RatPoly, factor_over_q
from .diffop import DiffOperator
from .numberfield import NumberField
from .symbol import RiemannSymbol
from .points import INFINITY, point_from_factor


def q_quantity(dop: DiffOperator) -> RatFunc:
    """Q = a2 a3/2 - a1 - a3^3/8 + a2' - 3/4 a3 a3' - a3''/2 for the monic form."""
    if dop.order != 4:
        raise WrongOrder(f"Q is defined for order 4, got {dop.order}")
    m = dop.monic()
    a1, a2, a3 = m.a(1), m.a(2), m.a(3)
    d3 = a3.derivative()
    return (a2 * a3 * Fraction(1, 2) - a1 - a3**3 * Fraction(1, 8) + a2.derivative()
            - a3 * d3 * Fraction(3, 4) - d3.derivative() * Fraction(1, 2))


@dataclass(frozen=True)
class AlphaFunction:
    """alpha = constant * prod f_i(t)^e_i with monic irreducible f_i."""

    constant: Fraction
    factors: tuple  # of (RatPoly, exponent)
    order: int

    @property
    def exponent_at_infinity(self) -> Fraction:
        """ord of alpha in the local parameter 1/t."""
        return -sum((e * f.degree for f, e in self.factors), Fraction(0))

    @property
    def rational(self) -> bool:
        return all(isinstance(e, Fraction) and e.denominator == 1 for _, e in self.factors)

    def exponent_at(self, point) -> Fraction:
        for f, e in self.factors:
            if point_from_factor(f) == point:
                return e
        if point == INFINITY:
            return self.exponent_at_infinity
        return Fraction(0)

    def as_ratfunc(self) -> RatFunc:
        if not self.rational:
            raise ValueError("alpha is not a rational function")
        out = RatFunc(RatPoly.const(self.constant))
        for f, e in self.factors:
            out = out * RatFunc(f) ** int(e)
        return out

    def to_string(self) -> str:
        parts = [str(self.constant)] if self.constant != 1 else []
        for f, e in self.factors:
            parts.append(f"({f.to_string('t')})^({e})")
        return "*".join(parts) or "1"


def alpha_dual_function(dop: DiffOperator) -> AlphaFunction:
    """Solve alpha' = -(2/n) r alpha with r the subleading coefficient of the monic operator.

    Each simple pole of r along an irreducible f contributes f^e with
    e = -(2/n) res; the residue is computed in Q[x]/f.
    """
    n = dop.order
    r = dop.monic().a(n - 1)
    if r.is_zero():
        return AlphaFunction(Fraction(1), (), n)
    if r.order_at_infinity() < 1:
        raise NonSimplePole("subleading coefficient is not O(1/t) at infinity")
    _, facs = factor_over_q(r.den)
    factors = []
    for f, m in facs:
        if m > 1:
            raise NonSimplePole(f"pole of order {m} along {f.to_string('t')}")
        w = r.den.exact_div(f)
        K = NumberField(f)
        a = K.generator()
        res = r.num(a) / (f.derivative()(a) * w(a))
        e = res * Fraction(-2, n)
        factors.append((f, e.to_fraction() if e.is_rational() else e))
    return AlphaFunction(Fraction(1), tuple(factors), n)


@dataclass(frozen=True)
class ParityReport:
    column_sums: tuple  # (point, sum or None, even?)
    all_even: bool


def exponent_parity(symbol: RiemannSymbol) -> ParityReport:
    """Whether the exponents in every column add up to an even integer."""
    rows = []
    for c in symbol.columns:
        s = c.exponent_sum
        even = s is not None and s.denominator == 1 and s.numerator % 2 == 0
        rows.append((c.point, s, even))
    return ParityReport(tuple(rows), all(r[2] for r in rows))
