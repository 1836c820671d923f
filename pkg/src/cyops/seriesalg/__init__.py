"""Exact truncated power series, polynomials and integrality analysis."""
from .integrality import IntegralityReport, n_integrality_scan
from .multivariate import LaurentPoly, MSeries, mseries_expand_rational
from .poly import RatFunc, RatPoly, factor_over_q
from .qseries import (QSeries, hadamard_product, series_arith, series_compose,
                      series_exp_log, series_revert)

__all__ = [
    "IntegralityReport", "LaurentPoly", "MSeries", "QSeries", "RatFunc", "RatPoly",
    "factor_over_q", "hadamard_product", "mseries_expand_rational", "n_integrality_scan",
    "series_arith", "series_compose", "series_exp_log", "series_revert",
]
