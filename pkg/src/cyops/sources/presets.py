"""Named series sources used by the CLI and the experiment scripts."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable

from ..seriesalg.multivariate import LaurentPoly
from ..seriesalg.qseries import QSeries, hadamard_product
from .binomial import apery_spec, binomial_sum_series, binomial_sum_value, grassmannian_g27_spec
from .congruence import IntegerSequence
from .factorial import factorial_ratio_series, factorial_ratio_term


def quintic_potential() -> LaurentPoly:
    """X1 + X2 + X3 + X4 + 1/(X1 X2 X3 X4)."""
    terms = {tuple(1 if j == i else 0 for j in range(4)): 1 for i in range(4)}
    terms[(-1, -1, -1, -1)] = 1
    return LaurentPoly(4, terms)


def aesz25_series(M: int) -> QSeries:
    """C(2n,n)^2 times the Apery numbers."""
    c = QSeries((comb(2 * n, n) ** 2 for n in range(M + 1)), M)
    return hadamard_product(c, binomial_sum_series(apery_spec(), M))


def bessel5_series(M: int) -> QSeries:
    """sum t^n / (n!)^5."""
    return QSeries((Fraction(1, factorial(n) ** 5) for n in range(M + 1)), M)


SERIES: dict[str, Callable[[int], QSeries]] = {
    "quintic": lambda M: factorial_ratio_series([5], [1] * 5, M),
    "apery": lambda M: binomial_sum_series(apery_spec(), M),
    "g27": lambda M: binomial_sum_series(grassmannian_g27_spec(), M),
    "aesz25": aesz25_series,
    "bessel5": bessel5_series,
}

SEQUENCES: dict[str, Callable[[], IntegerSequence]] = {
    "quintic": lambda: IntegerSequence(lambda n: factorial_ratio_term([5], [1] * 5, n), "quintic"),
    "sextic": lambda: IntegerSequence(lambda n: factorial_ratio_term([6], [1] * 6, n), "sextic"),
    "apery": lambda: IntegerSequence(lambda n: binomial_sum_value(apery_spec(), n), "apery"),
    "g27": lambda: IntegerSequence(lambda n: binomial_sum_value(grassmannian_g27_spec(), n), "g27"),
    "central": lambda: IntegerSequence(lambda n: comb(2 * n, n), "central"),
}


def named_series(name: str, M: int) -> QSeries:
    try:
        return SERIES[name](M)
    except KeyError:
        raise KeyError(f"unknown source {name!r}; known: {sorted(SERIES)}") from None


def named_sequence(name: str) -> IntegerSequence:
    try:
        return SEQUENCES[name]()
    except KeyError:
        raise KeyError(f"unknown sequence {name!r}; known: {sorted(SEQUENCES)}") from None
