"""Deciding (heuristically, from finitely many terms) whether c*phi(N t) is integral."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from sympy import primerange

from ..errors import InsufficientTruncation
from .qseries import QSeries

DEFAULT_FLOOR = 20


@dataclass(frozen=True)
class IntegralityReport:
    """Outcome of an N-integrality scan.

    On success ``integral`` is True and c * phi(N t) has integer coefficients
    through the truncation. On failure ``witness`` names a prime whose
    denominator exponent outgrows every linear bound, or ``unbounded`` is set
    when new primes keep entering the denominators.
    """

    integral: bool
    c: int = 1
    N: int = 1
    exponents: dict = field(default_factory=dict)
    witness: int | None = None
    unbounded: bool = False
    window: tuple[int, int] = (0, 0)
    reason: str = ""

    @property
    def strict(self) -> bool:
        """Integral with no rescaling and no common denominator."""
        return self.integral and self.c == 1 and self.N == 1

    def as_tuple(self) -> tuple[bool, int, int]:
        return (self.integral, self.c, self.N)


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _denominator_primes(dens: list[int], limit: int) -> tuple[set[int], int]:
    """Primes <= limit dividing any denominator, plus the product of leftover cofactors."""
    found: set[int] = set()
    leftover = 1
    for d in set(dens):
        if d == 1:
            continue
        for p in primerange(2, limit + 1):
            if p * p > d:
                break
            if d % p == 0:
                found.add(p)
                while d % p == 0:
                    d //= p
        if d > 1:
            if d <= limit:
                found.add(d)
            else:
                leftover *= d
    return found, leftover


def n_integrality_scan(a: QSeries, floor: int = DEFAULT_FLOOR) -> IntegralityReport:
    """Find c, N with c*a(N t) integral, judged on the window [T/2, T].

    For each denominator prime p the exponent s_p is the least s >= 0 such that
    v_p(den a_n) - s*n over the window never exceeds its maximum over the early
    coefficients; a prime needing a slope beyond anything the early coefficients
    exhibit is wild. Primes that first appear inside the window signal an
    unbounded prime set.
    """
    T = a.trunc
    if T < floor:
        raise InsufficientTruncation(f"need at least {floor} terms to decide, have {T}")
    lo = T // 2
    window = (lo, T)
    coeffs = a.coeffs
    dens = [c.denominator for c in coeffs]
    limit = max(1000, 20 * T)
    primes, leftover = _denominator_primes(dens, limit)
    if leftover > 1:
        return IntegralityReport(False, unbounded=True, window=window,
                                 reason=f"large prime factors in denominators ({leftover})")
    early_primes = {p for p in primes if any(d % p == 0 for d in dens[:lo])}
    late_only = sorted(primes - early_primes)
    if late_only:
        return IntegralityReport(False, witness=late_only[0], unbounded=True, window=window,
                                 reason=f"primes first appearing in the window: {late_only[:8]}")

    exponents: dict[int, int] = {}
    for p in sorted(primes):
        d = {n: p_valuation(dens[n], p) for n in range(T + 1) if coeffs[n] and dens[n] % p == 0}
        d.update({n: 0 for n in range(T + 1) if coeffs[n] and n not in d})
        early = [n for n in d if n < lo]
        late = [n for n in d if n >= lo]
        s_cap = max([-(-d[n] // n) for n in early if n > 0] + [0])
        chosen = None
        for s in range(s_cap + 1):
            top_early = max([d[n] - s * n for n in early] + [0])
            top_late = max(d[n] - s * n for n in late) if late else top_early
            if top_late <= top_early:
                chosen = s
                break
        if chosen is None:
            return IntegralityReport(False, witness=p, window=window,
                                     reason=f"denominator exponent of {p} grows superlinearly")
        if chosen:
            exponents[p] = chosen
    N = 1
    for p, s in exponents.items():
        N *= p**s
    c = 1
    for n, x in enumerate(coeffs):
        if x:
            c = lcm(c, (x * Fraction(N) ** n).denominator)
    return IntegralityReport(True, c=c, N=N, exponents=exponents, window=window,
                             reason="integral" if (c, N) == (1, 1) else "N-integral")
