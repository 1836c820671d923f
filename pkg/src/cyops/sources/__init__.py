"""Generators of candidate period series and arithmetic verifiers."""
from .binomial import (Affine, Binom, BinomialSumSpec, SignPower, SumIndex, apery_spec,
                       binomial_sum_series, binomial_sum_value, grassmannian_g27_spec)
from .congruence import DworkReport, IntegerSequence, dwork_check
from .constant_term import constant_term_series
from .diagonal import algebraic_series_solve, diagonal_of_rational, furstenberg_embed
from .factorial import borel_laplace, factorial_ratio_series
from .ramanujan import agreement_digits, guillera_six_sum, ramanujan_partial_sum

__all__ = [
    "Affine", "Binom", "BinomialSumSpec", "DworkReport", "IntegerSequence", "SignPower",
    "SumIndex", "agreement_digits", "algebraic_series_solve", "apery_spec",
    "binomial_sum_series", "binomial_sum_value", "borel_laplace", "constant_term_series",
    "diagonal_of_rational", "dwork_check", "factorial_ratio_series", "furstenberg_embed",
    "grassmannian_g27_spec", "guillera_six_sum", "ramanujan_partial_sum",
]
