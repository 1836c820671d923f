"""Zeta-value symbols, Gamma-class expansions, reflection vectors and the pairing."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import bernoulli

from .errors import NonPositiveDegree

Monomial = tuple[tuple[int, int], ...]  # ((symbol index, power), ...) sorted
GAMMA = 1  # symbol index of gamma/(2 pi i); index k >= 2 is lambda_k


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for k, p in b:
        d[k] = d.get(k, 0) + p
    return tuple(sorted(d.items()))


def _weight(m: Monomial) -> int:
    return sum(k * p for k, p in m)


class ZetaPoly:
    """Rational combination of monomials in gamma-hat (weight 1) and lambda_k (weight k).

    ``cap`` truncates products at a total weight; None keeps everything.
    """

    __slots__ = ("terms", "cap")

    def __init__(self, terms: dict | None = None, cap: int | None = None):
        self.cap = cap
        self.terms: dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c and (cap is None or _weight(m) <= cap):
                self.terms[m] = self.terms.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def const(cls, c, cap: int | None = None) -> "ZetaPoly":
        return cls({(): c}, cap)

    @classmethod
    def lam(cls, k: int, coeff=1, cap: int | None = None) -> "ZetaPoly":
        if k < 2:
            raise ValueError("lambda_k needs k >= 2")
        return cls({((k, 1),): coeff}, cap)

    @classmethod
    def gamma_hat(cls, coeff=1, cap: int | None = None) -> "ZetaPoly":
        return cls({((GAMMA, 1),): coeff}, cap)

    def _cap_with(self, other: "ZetaPoly") -> int | None:
        caps = [c for c in (self.cap, other.cap) if c is not None]
        return min(caps) if caps else None

    def _coerce(self, other):
        if isinstance(other, ZetaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ZetaPoly.const(other, self.cap)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ZetaPoly(out, self._cap_with(other))

    __radd__ = __add__

    def __neg__(self):
        return ZetaPoly({m: -c for m, c in self.terms.items()}, self.cap)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaPoly({m: c * other for m, c in self.terms.items()}, self.cap)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cap = self._cap_with(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                if cap is None or _weight(m) <= cap:
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
        return ZetaPoly(out, cap)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (1 / Fraction(c))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(m == () for m in self.terms)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} still contains symbols")
        return self.terms.get((), Fraction(0))

    def symbols(self) -> set[int]:
        return {k for m in self.terms for k, _ in m}

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(tuple(sorted(monomial)), Fraction(0))

    def is_homogeneous(self, w: int) -> bool:
        return all(_weight(m) == w for m in self.terms)

    def evaluate_even(self) -> "ZetaPoly":
        """Replace lambda_2m by the rational -B_2m / (2 (2m)!)."""
        out = ZetaPoly({}, self.cap)
        for m, c in self.terms.items():
            term = ZetaPoly.const(c, self.cap)
            for k, p in m:
                if k >= 2 and k % 2 == 0:
                    term = term * (even_lambda_value(k) ** p)
                else:
                    term = term * ZetaPoly({((k, p),): 1})
            out = out + term
        return out

    def as_zeta_string(self) -> str:
        """Render with lambda_k read as zeta(k) (coefficients of the x-variable)."""
        return self._render(lambda k: "gamma" if k == GAMMA else f"zeta({k})")

    def __repr__(self):
        return self._render(lambda k: "g" if k == GAMMA else f"l{k}")

    def _render(self, name) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (_weight(m), m)):
            c = self.terms[m]
            mono = "*".join(name(k) if p == 1 else f"{name(k)}^{p}" for k, p in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def even_lambda_value(k: int) -> Fraction:
    """zeta(2m)/(2 pi i)^(2m) = -B_2m / (2 (2m)!)."""
    if k % 2 or k < 2:
        raise ValueError("only even weights have a rational value")
    b = bernoulli(k)
    from math import factorial

    return -Fraction(int(b.p), int(b.q)) / (2 * factorial(k))


LAMBDA2_VALUE = Fraction(-1, 24)


# series in one variable with ZetaPoly coefficients -------------------------

def _series_mul(a: Sequence[ZetaPoly], b: Sequence[ZetaPoly], w: int) -> list[ZetaPoly]:
    out = [ZetaPoly() for _ in range(w + 1)]
    for i, x in enumerate(a[: w + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: w + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _series_exp(a: Sequence[ZetaPoly], w: int) -> list[ZetaPoly]:
    """exp of a series with zero constant term: n g_n = sum k a_k g_(n-k)."""
    g = [ZetaPoly.const(1)] + [ZetaPoly() for _ in range(w)]
    for n in range(1, w + 1):
        s = ZetaPoly()
        for k in range(1, n + 1):
            if not a[k].is_zero() and not g[n - k].is_zero():
                s = s + a[k] * g[n - k] * k
        g[n] = s / n
    return g


def log_gamma_series(a, w: int) -> list[ZetaPoly]:
    """log Gamma(1 + a z) with z = x/(2 pi i), as coefficients of x^j, j <= w.

    log Gamma(1+u) = -gamma u + sum_{j>=2} (-1)^j zeta(j) u^j / j, and
    zeta(j) z^j = lambda_j x^j.
    """
    a = Fraction(a)
    out = [ZetaPoly() for _ in range(w + 1)]
    if w >= 1:
        out[1] = ZetaPoly.gamma_hat(-a)
    for j in range(2, w + 1):
        out[j] = ZetaPoly.lam(j, Fraction((-1) ** j) * a**j / j)
    return out


def gamma_series(a, w: int) -> list[ZetaPoly]:
    """Gamma(1 + a x/(2 pi i)) to order w."""
    return _series_exp(log_gamma_series(a, w), w)


def gamma_ratio_series(k: int, w: int) -> list[ZetaPoly]:
    """Gamma(1 + k z) / Gamma(1 + z)^k, coefficients of x^j with z = x/(2 pi i).

    The coefficient of x^j is homogeneous of weight j in the lambdas; reading
    lambda_j as zeta(j) gives the coefficient of z^j.
    """
    if w < 2:
        raise ValueError("weight cap must be at least 2")
    top, base = log_gamma_series(k, w), log_gamma_series(1, w)
    log_ratio = [t - base[j] * k for j, t in enumerate(top)]
    if any(GAMMA in c.symbols() for c in log_ratio):
        raise ArithmeticError("Euler-Mascheroni terms failed to cancel")
    return _series_exp(log_ratio, w)


def reflection_product_series(w: int) -> list[ZetaPoly]:
    """Gamma(1 + x/2 pi i) Gamma(1 - x/2 pi i) in the symbol ring."""
    return _series_mul(gamma_series(1, w), gamma_series(-1, w), w)


# Gamma class and reflection vectors ----------------------------------------

@dataclass(frozen=True)
class CohomologyClass:
    """Coefficients of 1, H, H^2, H^3; slot k>=1 stores the number paired with H^(3-k)."""

    slots: tuple[ZetaPoly, ...]

    def dual(self) -> "CohomologyClass":
        """Multiply the H^k slot by (-1)^k."""
        return CohomologyClass(tuple(s * (-1) ** k for k, s in enumerate(self.slots)))


def gamma_class_cy3(d: int, c: int, e: int, w: int = 3) -> CohomologyClass:
    """exp(sum_k (-1)^k lambda_k p_k / k) for c_1 = 0, with p_2 = -2 c_2 and p_3 = 3 c_3.

    Slot 2 carries the c_2.H number c and slot 3 the Euler number e.
    """
    slots = [ZetaPoly.const(1), ZetaPoly(), ZetaPoly(), ZetaPoly()]
    # power sums of Chern roots in terms of the two numbers, weight by weight
    power_sums = {2: Fraction(-2 * c), 3: Fraction(3 * e)}
    for k, pk in power_sums.items():
        if k <= w:
            slots[k] = slots[k] + ZetaPoly.lam(k, Fraction((-1) ** k) * pk / k)
    return CohomologyClass(tuple(slots))


FrobVector = tuple  # four ZetaPoly coordinates in the basis u_0..u_3


def mir(cls: CohomologyClass, d: int) -> FrobVector:
    """Slot 0 goes to d u_0 and slot k >= 1 to u_k."""
    return tuple([cls.slots[0] * d] + list(cls.slots[1:]))


def reflection_vector(d: int, c: int, e: int) -> FrobVector:
    """S = mir(Gamma(O_X) dual) with lambda_2 evaluated, i.e. (d, 0, c/24, e lambda_3)."""
    if d <= 0:
        raise NonPositiveDegree(f"degree must be positive, got {d}")
    assert even_lambda_value(2) == LAMBDA2_VALUE
    v = mir(gamma_class_cy3(d, c, e).dual(), d)
    return tuple(x.evaluate_even() for x in v)


def as_frob_vector(values: Iterable) -> FrobVector:
    return tuple(v if isinstance(v, ZetaPoly) else ZetaPoly.const(v) for v in values)


# matrices --------------------------------------------------------------------

def t0_matrix() -> list[list[Fraction]]:
    """Local monodromy at a MUM point on u_0..u_3 (column l is the image of u_l)."""
    F = Fraction
    return [
        [F(1), F(0), F(0), F(0)],
        [F(1), F(1), F(0), F(0)],
        [F(1, 2), F(1), F(1), F(0)],
        [F(1, 6), F(1, 2), F(1), F(1)],
    ]


def symplectic_pairing(d: int) -> list[list[Fraction]]:
    """<u_0,u_3> = 1/d = -<u_1,u_2>, antisymmetric."""
    if d <= 0:
        raise NonPositiveDegree(f"degree must be positive, got {d}")
    J = [[Fraction(0)] * 4 for _ in range(4)]
    J[0][3], J[3][0] = Fraction(1, d), Fraction(-1, d)
    J[1][2], J[2][1] = Fraction(-1, d), Fraction(1, d)
    return J


def mat_mul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    zero = ZetaPoly() if any(isinstance(x, ZetaPoly) for r in list(A) + list(B) for x in r) else Fraction(0)
    out = [[zero for _ in range(k)] for _ in range(n)]
    for i in range(n):
        for j in range(k):
            s = zero
            for l in range(m):
                a, b = A[i][l], B[l][j]
                if a != 0 and b != 0:
                    s = s + a * b
            out[i][j] = s
    return out


def transpose(A):
    return [list(r) for r in zip(*A)]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def pairing(v: Sequence, w: Sequence, J) -> ZetaPoly:
    total = ZetaPoly()
    for i in range(4):
        for j in range(4):
            if J[i][j] and not _is_zero(v[i]) and not _is_zero(w[j]):
                total = total + _zp(v[i]) * _zp(w[j]) * J[i][j]
    return total


def _zp(x) -> ZetaPoly:
    return x if isinstance(x, ZetaPoly) else ZetaPoly.const(x)


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, ZetaPoly) else x == 0


def apply_reflection(v: Sequence, S: Sequence, J) -> FrobVector:
    """v - <v, S> S."""
    c = pairing(v, S, J)
    return tuple(_zp(vi) - c * _zp(si) for vi, si in zip(v, S))


def reflection_matrix(S: Sequence, J) -> list[list[ZetaPoly]]:
    """Matrix of v -> v - <v,S> S on the basis u_0..u_3 (columns are images)."""
    cols = []
    for l in range(4):
        e = [0] * 4
        e[l] = 1
        cols.append(apply_reflection(e, S, J))
    return [[cols[l][i] for l in range(4)] for i in range(4)]


def to_zeta_matrix(A) -> list[list[ZetaPoly]]:
    return [[_zp(x) for x in row] for row in A]


def entries_in_lambda3(A) -> bool:
    """Every entry is a polynomial in lambda_3 alone."""
    return all(_zp(x).symbols() <= {3} for row in A for x in row)
