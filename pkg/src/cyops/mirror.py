"""Mirror map, Yukawa coupling and instanton numbers."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import divisors, mobius

from .errors import InputError, NotOrderFour
from .frobenius import FrobeniusBasis, LogSeries, frobenius_basis
from .opcore.theta import ThetaOperator
from .seriesalg.qseries import QSeries, series_compose, series_revert


@dataclass(frozen=True)
class MirrorData:
    q_of_t: QSeries
    t_of_q: QSeries
    K: QSeries | None = None
    scale: Fraction = Fraction(1)


@dataclass(frozen=True)
class InstantonTable:
    entries: tuple[tuple[int, Fraction], ...]
    scale: Fraction = Fraction(1)

    def values(self) -> list[Fraction]:
        return [v for _, v in self.entries]

    def __getitem__(self, d: int) -> Fraction:
        for e, v in self.entries:
            if e == d:
                return v
        raise KeyError(d)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for _, v in self.entries)

    def first_non_integral(self) -> tuple[int, int] | None:
        for d, v in self.entries:
            if v.denominator != 1:
                return d, v.denominator
        return None


def mirror_map(fb: FrobeniusBasis) -> tuple[QSeries, QSeries]:
    """q = t exp(f_1/f_0) and its compositional inverse t(q)."""
    if fb.n < 2:
        raise InputError("mirror map needs a basis of order at least 2")
    ratio = fb.f(1) / fb.f(0)
    q = ratio.exp().mul_t(1).truncate(fb.trunc)
    return q, series_revert(q)


def _log_part_ratios(fb: FrobeniusBasis, t_of_q: QSeries) -> list[QSeries]:
    """G_k = (f_k / f_0) expressed in q."""
    f0 = fb.f(0)
    return [series_compose(fb.f(k) / f0, t_of_q) for k in range(fb.n)]


def _ratio_in_q(fb: FrobeniusBasis, G: list[QSeries], k: int) -> LogSeries:
    """y_k / y_0 in the q-coordinate, where log t = log q - G_1."""
    m = G[0].trunc
    log_t = LogSeries({1: QSeries.one(m), 0: -G[1]}, m) if fb.n > 1 else LogSeries.log_power(1, m)
    total = LogSeries({}, m)
    power = LogSeries.from_series(QSeries.one(m))
    fact = 1
    for j in range(k + 1):
        if j:
            power = power * log_t
            fact *= j
        total = total + power * G[k - j] * Fraction(1, fact)
    return total


def yukawa_coupling(fb: FrobeniusBasis, md: MirrorData | tuple) -> QSeries:
    """K(q) = theta_q^2 (y_2 / y_0), a power series with K(0) = 1."""
    if fb.n != 4:
        raise NotOrderFour(f"Yukawa coupling needs order 4, got {fb.n}")
    t_of_q = md.t_of_q if isinstance(md, MirrorData) else md[1]
    G = _log_part_ratios(fb, t_of_q)
    k = _ratio_in_q(fb, G, 2).theta().theta()
    if k.log_degree() > 0:
        raise ArithmeticError("logarithmic terms survived in the Yukawa coupling")
    return k.part(0)


def normal_form_check(fb: FrobeniusBasis, md: MirrorData | tuple) -> bool:
    """theta^2 ((theta^2 (y_3/y_0)) / K) vanishes identically to truncation."""
    if fb.n != 4:
        return False
    t_of_q = md.t_of_q if isinstance(md, MirrorData) else md[1]
    K = md.K if isinstance(md, MirrorData) and md.K is not None else yukawa_coupling(fb, md)
    G = _log_part_ratios(fb, t_of_q)
    inner = _ratio_in_q(fb, G, 3).theta().theta()
    outer = (inner * K.inverse()).theta().theta()
    return outer.is_zero()


def instanton_numbers(K: QSeries, D: int, n0=1) -> InstantonTable:
    """Moebius inversion of K = 1 + sum_d (n_d/n0) d^3 q^d / (1 - q^d)."""
    if K.coeffs[0] != 1:
        raise InputError("Yukawa coupling must be normalised to K(0) = 1")
    if D > K.trunc:
        raise InputError(f"depth {D} exceeds the truncation {K.trunc}")
    n0 = Fraction(n0)
    entries = []
    for d in range(1, D + 1):
        s = sum((int(mobius(d // e)) * K.coeffs[e] for e in divisors(d)), Fraction(0))
        entries.append((d, n0 * s / d**3))
    return InstantonTable(tuple(entries), n0)


def lambert_series(table: InstantonTable, trunc: int) -> QSeries:
    """Rebuild K from an instanton table."""
    out = [Fraction(0)] * (trunc + 1)
    out[0] = Fraction(1)
    for d, n in table.entries:
        c = n / table.scale * d**3
        for m in range(d, trunc + 1, d):
            out[m] += c
    return QSeries(out, trunc)


def mirror_pipeline(op: ThetaOperator, M: int, n0=1) -> tuple[FrobeniusBasis, MirrorData]:
    fb = frobenius_basis(op, M)
    q, t = mirror_map(fb)
    K = yukawa_coupling(fb, (q, t)) if fb.n == 4 else None
    return fb, MirrorData(q, t, K, Fraction(n0))
