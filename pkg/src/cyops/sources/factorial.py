"""Factorial-ratio series and the coefficientwise Laplace transform."""
from __future__ import annotations

import warnings
from fractions import Fraction
from math import factorial
from typing import Sequence

from ..seriesalg.qseries import QSeries


def factorial_ratio_term(numerators: Sequence[int], denominators: Sequence[int], n: int) -> Fraction:
    num = 1
    for u in numerators:
        num *= factorial(u * n)
    den = 1
    for v in denominators:
        den *= factorial(v * n)
    return Fraction(num, den)


def factorial_ratio_series(numerators: Sequence[int], denominators: Sequence[int], M: int) -> QSeries:
    """a_n = prod (u_i n)! / prod (v_j n)!."""
    if any(u <= 0 for u in list(numerators) + list(denominators)):
        raise ValueError("factorial arguments must be positive multiples of n")
    if sum(numerators) != sum(denominators):
        warnings.warn("unbalanced factorial ratio: coefficients are not expected to be integral",
                      stacklevel=2)
    return QSeries((factorial_ratio_term(numerators, denominators, n) for n in range(M + 1)), M)


def borel_laplace(a: QSeries) -> QSeries:
    """b_m = m! a_m."""
    out, f = [], 1
    for m, c in enumerate(a.coeffs):
        if m:
            f *= m
        out.append(c * f)
    return QSeries(out, a.trunc)
