"""Solutions at a point of maximal unipotent monodromy."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import NotMUM, ResonanceBreakdown
from .opcore.theta import ThetaOperator
from .seriesalg.poly import RatPoly
from .seriesalg.qseries import QSeries


class RhoPoly:
    """Polynomial in a nilpotent symbol rho with rho^n = 0."""

    __slots__ = ("c", "n")

    def __init__(self, coeffs: Sequence, n: int):
        c = [Fraction(x) for x in coeffs[:n]]
        c.extend([Fraction(0)] * (n - len(c)))
        self.c = c
        self.n = n

    @classmethod
    def const(cls, v, n: int) -> "RhoPoly":
        return cls([v], n)

    @classmethod
    def eval_shifted(cls, p: RatPoly, x, n: int) -> "RhoPoly":
        """p(x + rho) via the Taylor expansion at x."""
        out, d = [], p
        for k in range(n):
            out.append(d(Fraction(x)) / factorial(k))
            d = d.derivative()
            if d.is_zero():
                break
        return cls(out, n)

    def __add__(self, other: "RhoPoly") -> "RhoPoly":
        return RhoPoly([a + b for a, b in zip(self.c, other.c)], self.n)

    def __sub__(self, other: "RhoPoly") -> "RhoPoly":
        return RhoPoly([a - b for a, b in zip(self.c, other.c)], self.n)

    def __neg__(self):
        return RhoPoly([-a for a in self.c], self.n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RhoPoly([a * other for a in self.c], self.n)
        n = self.n
        out = [Fraction(0)] * n
        for i, a in enumerate(self.c):
            if a:
                for j in range(n - i):
                    b = other.c[j]
                    if b:
                        out[i + j] += a * b
        return RhoPoly(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "RhoPoly":
        a0 = self.c[0]
        if a0 == 0:
            raise ZeroDivisionError("RhoPoly with zero constant term")
        inv = [Fraction(1) / a0]
        for k in range(1, self.n):
            s = sum((self.c[j] * inv[k - j] for j in range(1, k + 1)), Fraction(0))
            inv.append(-s / a0)
        return RhoPoly(inv, self.n)

    def __truediv__(self, other: "RhoPoly") -> "RhoPoly":
        return self * other.inverse()

    def __eq__(self, other):
        return isinstance(other, RhoPoly) and self.n == other.n and self.c == other.c

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k]

    def __repr__(self):
        return "RhoPoly(" + " + ".join(f"{a}*r^{k}" for k, a in enumerate(self.c) if a) + ")"


class LogSeries:
    """sum_j L^j g_j(t) with L = log t and g_j truncated power series."""

    __slots__ = ("parts", "trunc")

    def __init__(self, parts: dict[int, QSeries], trunc: int | None = None):
        if trunc is None:
            trunc = min((s.trunc for s in parts.values()), default=0)
        self.trunc = trunc
        self.parts = {j: s.truncate(trunc) for j, s in parts.items() if not s.truncate(trunc).is_zero()}

    @classmethod
    def from_series(cls, s: QSeries) -> "LogSeries":
        return cls({0: s}, s.trunc)

    @classmethod
    def log_power(cls, j: int, trunc: int) -> "LogSeries":
        return cls({j: QSeries.one(trunc)}, trunc)

    def log_degree(self) -> int:
        return max(self.parts, default=-1)

    def part(self, j: int) -> QSeries:
        return self.parts.get(j, QSeries.zero(self.trunc))

    def is_zero(self) -> bool:
        return not self.parts

    def __add__(self, other: "LogSeries") -> "LogSeries":
        m = min(self.trunc, other.trunc)
        keys = set(self.parts) | set(other.parts)
        return LogSeries({j: self.part(j).truncate(m) + other.part(j).truncate(m) for j in keys}, m)

    def __neg__(self):
        return LogSeries({j: -s for j, s in self.parts.items()}, self.trunc)

    def __sub__(self, other: "LogSeries") -> "LogSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LogSeries({j: s * other for j, s in self.parts.items()}, self.trunc)
        if isinstance(other, QSeries):
            other = LogSeries.from_series(other)
        m = min(self.trunc, other.trunc)
        out: dict[int, QSeries] = {}
        for i, a in self.parts.items():
            for j, b in other.parts.items():
                prod = a.truncate(m) * b.truncate(m)
                out[i + j] = out[i + j] + prod if i + j in out else prod
        return LogSeries(out, m)

    __rmul__ = __mul__

    def theta(self) -> "LogSeries":
        """t d/dt with theta(L^j g) = j L^(j-1) g + L^j theta(g)."""
        out: dict[int, QSeries] = {}
        for j, g in self.parts.items():
            out[j] = out[j] + g.theta() if j in out else g.theta()
            if j:
                out[j - 1] = out[j - 1] + g * j if j - 1 in out else g * j
        return LogSeries(out, self.trunc)

    def mul_t(self, k: int) -> "LogSeries":
        return LogSeries({j: s.mul_t(k) for j, s in self.parts.items()}, self.trunc + k)

    def apply(self, op: ThetaOperator) -> "LogSeries":
        """Apply sum_i t^i P_i(Theta); exact to the input truncation."""
        powers = [self]
        for _ in range(op.order):
            powers.append(powers[-1].theta())
        total = LogSeries({}, self.trunc)
        for i, p in enumerate(op.polys):
            if p.is_zero():
                continue
            acc = LogSeries({}, self.trunc)
            for k, c in enumerate(p.coeffs):
                if c:
                    acc = acc + powers[k] * c
            total = total + acc.mul_t(i).truncate_to(self.trunc)
        return total

    def truncate_to(self, m: int) -> "LogSeries":
        return LogSeries({j: s.truncate(min(m, s.trunc)) for j, s in self.parts.items()}, min(m, self.trunc))

    def __repr__(self):
        return "LogSeries(" + ", ".join(f"L^{j}: {s!r}" for j, s in sorted(self.parts.items())) + ")"


def mum_check(op: ThetaOperator) -> bool:
    """True iff P_0 is a nonzero constant multiple of Theta^n."""
    p0 = op.P(0)
    n = op.order
    return p0.degree == n and all(c == 0 for c in p0.coeffs[:n])


def holomorphic_solution(op: ThetaOperator, M: int) -> QSeries:
    """The power series solution with a_0 = 1 at a MUM point, to order M."""
    if not mum_check(op):
        raise NotMUM("indicial polynomial at 0 is not a multiple of Theta^n")
    p0 = op.P(0)
    a = [Fraction(1)]
    for m in range(1, M + 1):
        s = Fraction(0)
        for i in range(1, min(op.degree, m) + 1):
            p = op.polys[i]
            if not p.is_zero() and a[m - i]:
                s += p(m - i) * a[m - i]
        lead = p0(m)
        if lead == 0:  # impossible for a MUM point, kept as an assertion
            raise ResonanceBreakdown(f"indicial polynomial vanishes at {m}")
        a.append(-s / lead)
    return QSeries(a, M)


@dataclass(frozen=True)
class FrobeniusBasis:
    """parts[k] = f_k; the solutions are y_k = sum_j (log t)^j / j! f_(k-j)."""

    n: int
    parts: tuple[QSeries, ...]

    @property
    def trunc(self) -> int:
        return self.parts[0].trunc

    def f(self, k: int) -> QSeries:
        return self.parts[k]

    def log_solution(self, k: int) -> LogSeries:
        return LogSeries({j: self.parts[k - j] / factorial(j) for j in range(k + 1)}, self.trunc)

    def monodromy_matrix(self) -> list[list[Fraction]]:
        """Action of log t -> log t + w on the scaled basis u_(n-1-k) = y_k / w^k.

        Substitutes L + w into each y_k, groups by powers of w and identifies
        every coefficient with a multiple of a basis element. Column l holds the
        image of u_l.
        """
        n = self.n
        T = [[Fraction(0)] * n for _ in range(n)]
        ys = [self.log_solution(k) for k in range(n)]
        for k in range(n):
            y = ys[k]
            # (L + w)^j = sum_a C(j, a) L^(j-a) w^a
            by_w: dict[int, dict[int, QSeries]] = {}
            for j, g in y.parts.items():
                for a in range(j + 1):
                    coeff = Fraction(factorial(j), factorial(a) * factorial(j - a))
                    slot = by_w.setdefault(a, {})
                    term = g * coeff
                    slot[j - a] = slot[j - a] + term if j - a in slot else term
            for a, parts in by_w.items():
                piece = LogSeries(parts, self.trunc)
                m = k - a  # candidate basis index by log degree
                target = ys[m]
                scalar = _proportionality(piece, target)
                if scalar is None:
                    raise ArithmeticError("monodromy image is not in the span of the basis")
                # y_k / w^k contributes scalar * y_m * w^a / w^k = scalar * u_(n-1-m)
                T[n - 1 - m][n - 1 - k] += scalar
        return T


def _proportionality(a: LogSeries, b: LogSeries) -> Fraction | None:
    """The c with a = c*b, or None."""
    c = None
    for j in set(a.parts) | set(b.parts):
        sa, sb = a.part(j), b.part(j)
        for x, y in zip(sa.coeffs, sb.coeffs):
            if y == 0:
                if x != 0:
                    return None
                continue
            r = x / y
            if c is None:
                c = r
            elif r != c:
                return None
    return c if c is not None else Fraction(0)


def frobenius_basis(op: ThetaOperator, M: int) -> FrobeniusBasis:
    """Frobenius basis from sum_i P_i(m + rho - i) a_(m-i)(rho) = 0 with a_0 = 1."""
    if not mum_check(op):
        raise NotMUM("indicial polynomial at 0 is not a multiple of Theta^n")
    n = op.order
    a = [RhoPoly.const(1, n)]
    for m in range(1, M + 1):
        s = RhoPoly.const(0, n)
        for i in range(1, min(op.degree, m) + 1):
            p = op.polys[i]
            if p.is_zero():
                continue
            s = s + RhoPoly.eval_shifted(p, m - i, n) * a[m - i]
        lead = RhoPoly.eval_shifted(op.P(0), m, n)
        a.append(-(s / lead))
    parts = tuple(QSeries([a[m][k] for m in range(M + 1)], M) for k in range(n))
    return FrobeniusBasis(n, parts)
