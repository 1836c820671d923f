"""Exact partial sums of Ramanujan-type series for 1/pi^2."""
from __future__ import annotations

from fractions import Fraction

import mpmath

from .congruence import IntegerSequence
from .factorial import factorial_ratio_term


def ramanujan_partial_sum(A: IntegerSequence, a, b, c, z0, T: int) -> Fraction:
    """sum_{n < T} A_n (a + b n + c n^2) z0^n."""
    a, b, c, z0 = (Fraction(x) for x in (a, b, c, z0))
    total = Fraction(0)
    zp = Fraction(1)
    for n in range(T):
        total += Fraction(A[n]) * (a + b * n + c * n * n) * zp
        zp *= z0
    return total


GUILLERA_SIX = {
    "A": lambda n: factorial_ratio_term([6], [1] * 6, n),
    "a": 36, "b": 504, "c": 2128, "z0": Fraction(1, 10**6),
    "target_numerator": 375,
}


def guillera_six_sum(T: int) -> Fraction:
    g = GUILLERA_SIX
    return ramanujan_partial_sum(IntegerSequence(g["A"]), g["a"], g["b"], g["c"], g["z0"], T)


def agreement_digits(x: Fraction, numerator: int = 375, precision: int = 200) -> int:
    """Number of correct decimal digits of x as an approximation to numerator / pi^2."""
    with mpmath.workdps(precision):
        target = mpmath.mpf(numerator) / mpmath.pi**2
        err = abs(mpmath.mpf(x.numerator) / x.denominator - target)
        if err == 0:
            return precision
        return int(mpmath.floor(-mpmath.log10(err)))
