"""Truncated univariate power series over Q with explicit truncation order."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Sequence

from ..errors import BadConstantTerm, DivisionByZeroConstantTerm, NotInvertible

_SCHOOLBOOK_CUTOFF = 24


def _schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, x in enumerate(a):
        if x and i < n:
            lim = n - i
            for j, y in enumerate(b[:lim]):
                out[i + j] += x * y
    return out


def _pack(vals: Sequence[int], width: int) -> int:
    pos = b"".join((v if v > 0 else 0).to_bytes(width, "little") for v in vals)
    neg = b"".join((-v if v < 0 else 0).to_bytes(width, "little") for v in vals)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def int_convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First n coefficients of the product of two integer polynomials.

    Large inputs go through Kronecker substitution so the heavy lifting
    happens inside CPython's big-integer multiplication.
    """
    a, b = list(a[:n]), list(b[:n])
    if not a or not b:
        return [0] * n
    if min(len(a), len(b)) <= _SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b, n)
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if bound == 0:
        return [0] * n
    width = (bound.bit_length() + 9) // 8
    prod = _pack(a, width) * _pack(b, width)
    count = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    offset = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * count, "little")
    raw = (prod + offset).to_bytes(width * count, "little")
    out = [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(min(count, n))]
    return out + [0] * (n - len(out))


def _to_ints(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in coeffs], 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class QSeries:
    """a_0 + a_1 t + ... + a_M t^M + O(t^(M+1)).

    ``trunc`` is the inclusive order up to which the coefficients are exact.
    """

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Iterable = (), trunc: int | None = None):
        c = [x if type(x) is Fraction else Fraction(x) for x in coeffs]
        if trunc is None:
            trunc = len(c) - 1
        if trunc < 0:
            raise ValueError("truncation order must be non-negative")
        if len(c) > trunc + 1:
            c = c[: trunc + 1]
        else:
            c.extend([Fraction(0)] * (trunc + 1 - len(c)))
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self.trunc: int = trunc

    # constructors
    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls((1,), trunc)

    @classmethod
    def t(cls, trunc: int) -> "QSeries":
        return cls((0, 1), trunc)

    @classmethod
    def from_function(cls, f: Callable[[int], object], trunc: int) -> "QSeries":
        return cls((f(n) for n in range(trunc + 1)), trunc)

    @classmethod
    def geometric(cls, trunc: int, ratio=1) -> "QSeries":
        """1/(1 - ratio*t)."""
        r = Fraction(ratio)
        return cls((r**n for n in range(trunc + 1)), trunc)

    # access
    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if n < 0 or n > self.trunc:
            raise IndexError(f"coefficient {n} outside truncation {self.trunc}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.trunc + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.trunc))

    def agrees_with(self, other: "QSeries | Sequence", upto: int | None = None) -> bool:
        """Coefficientwise equality up to the common (or given) order."""
        other_c = other.coeffs if isinstance(other, QSeries) else [Fraction(x) for x in other]
        m = min(len(self.coeffs), len(other_c))
        if upto is not None:
            m = min(m, upto + 1)
        return all(self.coeffs[k] == other_c[k] for k in range(m))

    def valuation(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, m: int) -> "QSeries":
        if m > self.trunc:
            raise ValueError(f"cannot extend truncation from {self.trunc} to {m}")
        return QSeries(self.coeffs[: m + 1], m)

    # ring operations
    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries((other,), self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = min(self.trunc, other.trunc)
        return QSeries((self.coeffs[k] + other.coeffs[k] for k in range(m + 1)), m)

    __radd__ = __add__

    def __neg__(self):
        return QSeries((-c for c in self.coeffs), self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = min(self.trunc, other.trunc)
        return QSeries((self.coeffs[k] - other.coeffs[k] for k in range(m + 1)), m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSeries((c * other for c in self.coeffs), self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        m = min(self.trunc, other.trunc)
        ai, ad = _to_ints(self.coeffs[: m + 1])
        bi, bd = _to_ints(other.coeffs[: m + 1])
        prod = int_convolve(ai, bi, m + 1)
        d = ad * bd
        if d == 1:
            return QSeries(prod, m)
        return QSeries((Fraction(v, d) for v in prod), m)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = QSeries.one(self.trunc), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """1/self by Newton iteration g <- g(2 - a g)."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise DivisionByZeroConstantTerm("series has zero constant term")
        g = QSeries((1 / a0,), 0)
        prec = 0
        while prec < self.trunc:
            prec = min(2 * prec + 1, self.trunc)
            g = QSeries(g.coeffs, prec)
            ag = self.truncate(prec) * g
            g = g * (2 - ag)
        return QSeries(g.coeffs, self.trunc)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = 1 / Fraction(other)
            return QSeries((c * inv for c in self.coeffs), self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    # calculus and substitutions
    def derivative(self) -> "QSeries":
        """d/dt; the result is exact to order trunc-1."""
        if self.trunc == 0:
            return QSeries.zero(0)
        return QSeries((k * self.coeffs[k] for k in range(1, self.trunc + 1)), self.trunc - 1)

    def integral(self) -> "QSeries":
        """Antiderivative with zero constant term, exact to trunc+1."""
        return QSeries([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.trunc + 1)

    def theta(self) -> "QSeries":
        """t d/dt."""
        return QSeries((k * c for k, c in enumerate(self.coeffs)), self.trunc)

    def mul_t(self, k: int = 1) -> "QSeries":
        """t^k * self for k >= 0, or division by t^-k when the low terms vanish."""
        if k >= 0:
            return QSeries([Fraction(0)] * k + list(self.coeffs), self.trunc + k)
        k = -k
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by t^{k}")
        return QSeries(self.coeffs[k:], self.trunc - k)

    def scale_var(self, c) -> "QSeries":
        """f(c t)."""
        c = Fraction(c)
        return QSeries((a * c**k for k, a in enumerate(self.coeffs)), self.trunc)

    def substitute_power(self, k: int) -> "QSeries":
        """f(t^k), exact to order k*(trunc+1)-1."""
        m = k * (self.trunc + 1) - 1
        out = [Fraction(0)] * (m + 1)
        for j, c in enumerate(self.coeffs):
            out[j * k] = c
        return QSeries(out, m)

    def exp(self) -> "QSeries":
        return series_exp_log(self, "exp")

    def log(self) -> "QSeries":
        return series_exp_log(self, "log")

    def compose(self, inner: "QSeries") -> "QSeries":
        return series_compose(self, inner)

    def revert(self) -> "QSeries":
        return series_revert(self)

    def hadamard(self, other: "QSeries") -> "QSeries":
        return hadamard_product(self, other)

    def denominators(self) -> list[int]:
        return [c.denominator for c in self.coeffs]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_string(self, var: str = "t", terms: int | None = None) -> str:
        parts = []
        shown = self.coeffs if terms is None else self.coeffs[:terms]
        for k, c in enumerate(shown):
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            coef = str(c) if (not mono or abs(c) != 1) else ("-" if c < 0 else "")
            if mono and coef not in ("", "-"):
                coef += "*"
            parts.append(f"{coef}{mono}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({var}^{self.trunc + 1})".replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QSeries({self.to_string(terms=8)})"


def series_arith(a: QSeries, b: QSeries, op: str) -> QSeries:
    """Binary arithmetic dispatch: op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series operation {op!r}")


def series_exp_log(a: QSeries, op: str) -> QSeries:
    """Formal exp (a_0 = 0) or log (a_0 = 1), same truncation as the input."""
    m = a.trunc
    if op == "exp":
        if a.coeffs[0] != 0:
            raise BadConstantTerm("exp needs a zero constant term")
        # n g_n = sum_k k a_k g_{n-k}
        ka = [k * c for k, c in enumerate(a.coeffs)]
        g = [Fraction(1)] + [Fraction(0)] * m
        for n in range(1, m + 1):
            s = sum((ka[k] * g[n - k] for k in range(1, n + 1) if ka[k]), Fraction(0))
            g[n] = s / n
        return QSeries(g, m)
    if op == "log":
        if a.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        if m == 0:
            return QSeries.zero(0)
        quotient = a.derivative() / a.truncate(m - 1)
        return quotient.integral()
    raise ValueError(f"unknown operation {op!r}")


def series_compose(outer: QSeries, inner: QSeries) -> QSeries:
    """outer(inner(t)) for inner with zero constant term, exact to the min truncation."""
    if inner.coeffs[0] != 0:
        raise BadConstantTerm("inner series must have zero constant term")
    m = min(outer.trunc, inner.trunc)
    inner = inner.truncate(m)
    v = inner.valuation()
    if v is None:
        return QSeries((outer.coeffs[0],), m)
    top = min(outer.trunc, m // v)
    acc = QSeries((outer.coeffs[top],), m)
    for k in range(top - 1, -1, -1):
        acc = acc * inner
        acc = QSeries((acc.coeffs[0] + outer.coeffs[k],) + acc.coeffs[1:], m)
    return acc


def series_revert(a: QSeries) -> QSeries:
    """Compositional inverse b with a(b(t)) = t, by precision-doubling Newton steps."""
    if a.coeffs[0] != 0:
        raise BadConstantTerm("reversion needs a zero constant term")
    if a.trunc < 1 or a.coeffs[1] == 0:
        raise NotInvertible("reversion needs a nonzero linear coefficient")
    m = a.trunc
    b = QSeries((0, 1 / a.coeffs[1]), 1)
    prec = 1
    # the top coefficient of a' is unknown; it never reaches the Newton correction
    # because the residual vanishes to order prec/2
    da = QSeries(a.derivative().coeffs, m)
    while prec < m:
        prec = min(2 * prec, m)
        b = QSeries(b.coeffs, prec)
        ab = series_compose(a.truncate(prec), b)
        resid = ab - QSeries.t(prec)
        dab = series_compose(da.truncate(prec), b)
        b = b - resid / dab
    return QSeries(b.coeffs, m)


def hadamard_product(a: QSeries, b: QSeries) -> QSeries:
    m = min(a.trunc, b.trunc)
    return QSeries((a.coeffs[k] * b.coeffs[k] for k in range(m + 1)), m)
