"""Differential operators: representations, transformations, local analysis."""
from .diffop import DiffOperator, adjoint, d_to_theta, multiplication_operator, theta_to_d
from .points import INFINITY, AlgebraicLocus, Infinity, RationalPoint
from .selfdual import AlphaFunction, alpha_dual_function, exponent_parity, q_quantity
from .symbol import (FuchsReport, IrrationalExponent, RiemannSymbol, fuchs_check,
                     local_exponents, riemann_symbol)
from .theta import (ThetaOperator, apply_operator, power_pullback, reciprocal_transform,
                    rescale_coordinate, shift_exponent, translate_point)

__all__ = [
    "AlgebraicLocus", "AlphaFunction", "DiffOperator", "FuchsReport", "INFINITY", "Infinity",
    "IrrationalExponent", "RationalPoint", "RiemannSymbol", "ThetaOperator", "adjoint",
    "alpha_dual_function", "apply_operator", "d_to_theta", "exponent_parity", "fuchs_check",
    "local_exponents", "multiplication_operator", "power_pullback", "q_quantity",
    "reciprocal_transform", "rescale_coordinate", "riemann_symbol", "shift_exponent",
    "theta_to_d", "translate_point",
]
