"""Constant terms of powers of a Laurent polynomial."""
from __future__ import annotations

import math
from fractions import Fraction

from ..errors import ResourceCapExceeded
from ..seriesalg.multivariate import LaurentPoly
from ..seriesalg.qseries import QSeries

DEFAULT_TERM_CAP = 2_000_000


def _functionals(dim: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        out.append(tuple(e))
        e[i] = -1
        out.append(tuple(e))
    if dim > 1:
        out.append((1,) * dim)
        out.append((-1,) * dim)
    return out


class _Pruner:
    """Necessary test that -e lies in j * conv(support) for some 0 <= j <= remaining.

    Each linear functional phi bounds j through j*min(phi) <= -phi(e) <= j*max(phi).
    """

    def __init__(self, W: LaurentPoly):
        self.rows = []
        for phi in _functionals(W.dim):
            vals = [sum(a * b for a, b in zip(phi, s)) for s in W.terms]
            self.rows.append((phi, min(vals), max(vals)))

    def feasible(self, e, remaining: int) -> bool:
        lo, hi = 0, remaining
        for phi, mn, mx in self.rows:
            v = -sum(a * b for a, b in zip(phi, e))
            # v <= j * mx
            if mx > 0:
                lo = max(lo, -(-v // mx))
            elif mx == 0:
                if v > 0:
                    return False
            else:
                hi = min(hi, math.floor(Fraction(v, mx)))
            # v >= j * mn
            if mn < 0:
                lo = max(lo, math.ceil(Fraction(v, mn)))
            elif mn == 0:
                if v < 0:
                    return False
            else:
                hi = min(hi, v // mn)
            if lo > hi:
                return False
        return True


def constant_term_series(W: LaurentPoly, M: int, term_cap: int = DEFAULT_TERM_CAP) -> QSeries:
    """a_n = [W^n]_0 for n <= M, multiplying sparsely and pruning unreachable exponents."""
    zero = (0,) * W.dim
    pruner = _Pruner(W)
    current: dict[tuple[int, ...], Fraction] = {zero: Fraction(1)}
    out = [Fraction(1)]
    wterms = list(W.terms.items())
    for k in range(1, M + 1):
        nxt: dict[tuple[int, ...], Fraction] = {}
        remaining = M - k
        for e, c in current.items():
            for s, w in wterms:
                f = tuple(x + y for x, y in zip(e, s))
                if f in nxt:
                    nxt[f] += c * w
                elif pruner.feasible(f, remaining):
                    nxt[f] = c * w
        current = {e: c for e, c in nxt.items() if c}
        if len(current) > term_cap:
            raise ResourceCapExceeded(f"{len(current)} live terms at power {k} exceed the cap {term_cap}")
        out.append(current.get(zero, Fraction(0)))
    return QSeries(out, M)
