from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PROPERTY_CASES
from cyops import corpus
from cyops.errors import (DegreeCapExceeded, InputError, IrregularPoint, NonFuchsian,
                          WrongOrder)
from cyops.frobenius import holomorphic_solution
from cyops.opcore import (INFINITY, DiffOperator, ThetaOperator, adjoint,
                          alpha_dual_function, apply_operator, d_to_theta, exponent_parity,
                          fuchs_check, local_exponents, power_pullback, q_quantity,
                          reciprocal_transform, rescale_coordinate, riemann_symbol,
                          shift_exponent, theta_to_d, translate_point)
from cyops.opcore.numberfield import NumberField
from cyops.opcore.symbol import IrrationalExponent, infinity_is_singular
from cyops.seriesalg import QSeries, RatFunc, RatPoly

T = RatPoly.x()
F = Fraction


def ops(max_order=3, max_degree=3):
    poly = st.lists(st.integers(-6, 6), min_size=1, max_size=max_order + 1).map(RatPoly)
    return (st.lists(poly, min_size=1, max_size=max_degree + 1)
            .filter(lambda ps: any(p.degree >= 1 for p in ps) and not ps[-1].is_zero())
            .map(ThetaOperator))


def load(name):
    return corpus.load(name).operator()


# Theta-form algebra -----------------------------------------------------------------

def test_composition_rule():
    # t Theta . t Theta = t^2 (Theta + 1) Theta
    a = ThetaOperator([RatPoly(), T])
    assert (a * a).polys == (RatPoly(), RatPoly(), (T + 1) * T)


@given(ops(2, 2), ops(2, 2), ops(2, 2))
@settings(max_examples=PROPERTY_CASES)
def test_composition_associative_and_acts(a, b, c):
    assert (a * b) * c == a * (b * c)
    s = QSeries([F(1, k + 1) for k in range(12)], 11)
    assert apply_operator(a * b, s) == apply_operator(a, apply_operator(b, s)).truncate(
        apply_operator(a * b, s).trunc)


def test_canonical_and_equivalent():
    op = ThetaOperator([F(-1, 2) * T**2, F(3, 4) * T])
    assert op.canonical() == ThetaOperator([2 * T**2, -3 * T])
    shifted = ThetaOperator([RatPoly(), T**2, T])
    assert shifted.strip_t() == ThetaOperator([T**2, T])
    assert shifted.equivalent(ThetaOperator([-T**2, -T]))


def test_zero_order_rejected():
    with pytest.raises(InputError):
        ThetaOperator([RatPoly.const(1), RatPoly.const(2)])


# conversions and involutions ----------------------------------------------------------

@given(ops())
@settings(max_examples=PROPERTY_CASES)
def test_theta_d_round_trip(op):
    # identity up to a unit (constant times a power of t)
    assert d_to_theta(theta_to_d(op)).equivalent(op)


def test_d_form_of_euler_operator():
    # Theta^2 = t^2 D^2 + t D, so Theta^2 - t^2 (Theta^2 - 1) = (t^2 - t^4) D^2 + (t - t^3) D + t^2
    t = RatFunc(RatPoly.x())
    L = DiffOperator([t**2, t - t**3, t**2 - t**4])
    assert d_to_theta(L) == ThetaOperator([T**2, 0, -(T - 1) * (T + 1)])


@given(ops(3, 2), st.integers(-5, 5).filter(bool))
@settings(max_examples=PROPERTY_CASES)
def test_translate_round_trip(op, p):
    # clearing t^k in the shifted chart leaves a polynomial left factor, so compare monic d-forms
    back = translate_point(translate_point(op, p), -p)
    assert theta_to_d(back).monic() == theta_to_d(op).monic()


@given(ops())
@settings(max_examples=PROPERTY_CASES)
def test_adjoint_is_an_involution(op):
    L = theta_to_d(op)
    assert adjoint(adjoint(L)) == L


@given(ops())
@settings(max_examples=PROPERTY_CASES)
def test_reciprocal_is_an_involution(op):
    assert reciprocal_transform(reciprocal_transform(op)).equivalent(op)


@given(ops())
@settings(max_examples=PROPERTY_CASES)
def test_fuchs_check_invariant_under_adjoint(op):
    L = theta_to_d(op)
    assert fuchs_check(L).fuchsian == fuchs_check(adjoint(L)).fuchsian


def test_adjoint_of_theta():
    # (t D)* = -D t = -t D - 1
    L = theta_to_d(ThetaOperator([T]))
    assert adjoint(L) == DiffOperator([RatFunc(-1), RatFunc(RatPoly((0, -1)))])


# transformations ------------------------------------------------------------------------

def test_rescale_and_pullback_act_on_solutions():
    quintic = load("quintic")
    y0 = holomorphic_solution(quintic, 20)
    assert apply_operator(rescale_coordinate(quintic, 3), y0.scale_var(3)).is_zero()
    assert apply_operator(power_pullback(quintic, 2), y0.substitute_power(2)).is_zero()


def test_rescale_moves_conifold():
    quintic = load("quintic")
    cols = riemann_symbol(rescale_coordinate(quintic, 5**5)).points()
    assert str(cols[1]) == str(F(1, 5**10))
    cols = riemann_symbol(rescale_coordinate(quintic, F(1, 5**5))).points()
    assert str(cols[1]) == "1"


def test_shift_exponent():
    op = ThetaOperator([T - F(1, 2)])  # annihilates t^(1/2)
    assert shift_exponent(op, F(1, 2)) == ThetaOperator([T])


def test_translate_to_conifold():
    moved = translate_point(load("quintic"), F(1, 3125))
    assert local_exponents(moved, 0) == [0, 1, 1, 2]


# local analysis ---------------------------------------------------------------------------

def test_regular_point_exponents():
    assert local_exponents(load("quintic"), F(1, 7)) == [0, 1, 2, 3]


def test_aesz245_symbol():
    sym = riemann_symbol(load("aesz245"))
    assert sym.column(F(1, 108)).exponents == (0, F(1, 6), 1, F(7, 6))
    assert sym.column(INFINITY).exponents == (F(2, 3), F(2, 3), F(7, 6), F(7, 6))
    assert sym.fuchs_relation_holds()


def test_irregular_operator():
    op = ThetaOperator([T**4, T])
    assert not fuchs_check(theta_to_d(op)).fuchsian
    with pytest.raises(NonFuchsian):
        riemann_symbol(op)
    with pytest.raises(IrregularPoint):
        local_exponents(op, INFINITY)


def test_infinity_detection():
    assert infinity_is_singular(load("quintic"))
    # (1 - t) Theta has constant solutions only and no pole at infinity
    assert not infinity_is_singular(ThetaOperator([T, -T]))
    # Theta - t(Theta + 2) is solved by (1 - t)^-2 ~ t^-2: exponent 2 makes infinity singular
    assert infinity_is_singular(ThetaOperator([T, -(T + 2)]))


def test_irrational_exponents_reported():
    op = ThetaOperator([T**2 - 2])
    exps = local_exponents(op, 0)
    assert all(isinstance(e, IrrationalExponent) for e in exps)


def test_number_field_cap():
    with pytest.raises(DegreeCapExceeded):
        NumberField(T**5 - 2)


# self-duality ---------------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["quintic", "aesz15", "aesz22", "aesz25", "aesz245", "bogner"])
def test_corpus_order_four_operators_are_self_dual(name):
    assert q_quantity(theta_to_d(load(name))).is_zero()


def test_q_detects_non_self_dual():
    assert not q_quantity(theta_to_d(ThetaOperator([T**4, T]))).is_zero()
    with pytest.raises(WrongOrder):
        q_quantity(theta_to_d(load("euler")))


def test_alpha_and_parity():
    alpha = alpha_dual_function(theta_to_d(load("aesz245")))
    assert not alpha.rational
    exps = {str(f.to_string("t")): e for f, e in alpha.factors}
    assert exps == {"t": -3, "t - 1/108": F(-11, 6)}
    parity = exponent_parity(riemann_symbol(load("aesz245")))
    assert not parity.all_even
    odd = [p for p, s, even in parity.column_sums if not even]
    assert [str(p) for p in odd] == ["1/108", "oo"]
    assert alpha_dual_function(theta_to_d(load("quintic"))).rational


@pytest.mark.parametrize("name", ["quintic", "aesz25", "bogner"])
def test_alpha_intertwines_operator_and_adjoint(name):
    L = theta_to_d(load(name)).monic()
    alpha = alpha_dual_function(L).as_ratfunc()
    a = DiffOperator([alpha])
    assert L * a == a * adjoint(L)
