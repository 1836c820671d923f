from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PROPERTY_CASES
from cyops import corpus
from cyops.errors import InputError, NotMUM, NotOrderFour
from cyops.frobenius import (LogSeries, RhoPoly, frobenius_basis, holomorphic_solution,
                             mum_check)
from cyops.gammaclass import t0_matrix
from cyops.mirror import (InstantonTable, instanton_numbers, lambert_series, mirror_map,
                          mirror_pipeline, normal_form_check, yukawa_coupling)
from cyops.opcore import ThetaOperator, rescale_coordinate
from cyops.seriesalg import QSeries, RatPoly, series_compose

T = RatPoly.x()


def load(name):
    return corpus.load(name).operator()


def test_rho_poly_arithmetic():
    a = RhoPoly([1, 2, 3], 3)
    assert (a * a.inverse()) == RhoPoly.const(1, 3)
    # (x + rho)^2 at x = 3 is 9 + 6 rho + rho^2
    assert RhoPoly.eval_shifted(T**2, 3, 3) == RhoPoly([9, 6, 1], 3)


def test_log_series_theta():
    # theta(L^2) = 2 L
    L2 = LogSeries.log_power(2, 5)
    assert L2.theta().parts.keys() == {1}
    assert L2.theta().part(1) == QSeries([2], 5)


def test_mum_detection():
    assert mum_check(load("quintic"))
    op = ThetaOperator([T * (T - 1), RatPoly.const(-1)])
    assert not mum_check(op)
    with pytest.raises(NotMUM):
        holomorphic_solution(op, 5)


def test_quintic_holomorphic_solution_is_factorial_ratio():
    y0 = holomorphic_solution(load("quintic"), 20)
    assert list(y0.coeffs) == [factorial(5 * n) // factorial(n) ** 5 for n in range(21)]


@pytest.mark.parametrize("name", ["quintic", "aesz25", "euler"])
def test_frobenius_solutions_are_annihilated(name):
    op = load(name)
    fb = frobenius_basis(op, 15)
    for k in range(fb.n):
        assert fb.log_solution(k).apply(op).is_zero()


def test_monodromy_matrix_is_t0():
    fb = frobenius_basis(load("quintic"), 10)
    assert fb.monodromy_matrix() == t0_matrix()


def test_mirror_map_round_trip():
    fb = frobenius_basis(load("quintic"), 12)
    q, t = mirror_map(fb)
    assert q.coeffs[:3] == (0, 1, 770)
    assert series_compose(q, t) == QSeries.t(12)


def test_yukawa_and_normal_form():
    fb, md = mirror_pipeline(load("quintic"), 12)
    assert md.K.coeffs[0] == 1
    assert normal_form_check(fb, md)
    fb, md = mirror_pipeline(ThetaOperator([T**4, T]), 12)
    assert not normal_form_check(fb, md)


def test_yukawa_needs_order_four():
    fb = frobenius_basis(load("euler"), 10)
    with pytest.raises(NotOrderFour):
        yukawa_coupling(fb, mirror_map(fb))


def test_yukawa_coordinate_covariance():
    # y(2t) solves the rescaled operator, so K'(q) = K(2 q)
    _, md = mirror_pipeline(load("quintic"), 10)
    _, md2 = mirror_pipeline(rescale_coordinate(load("quintic"), 2), 10)
    assert md2.K == md.K.scale_var(2)


@given(st.integers(1, 12).flatmap(lambda D: st.lists(
    st.integers(-10**6, 10**6), min_size=D, max_size=D)), st.integers(1, 7))
@settings(max_examples=PROPERTY_CASES)
def test_lambert_round_trip(values, n0):
    table = InstantonTable(tuple((d + 1, Fraction(v)) for d, v in enumerate(values)), Fraction(n0))
    K = lambert_series(table, len(values))
    assert instanton_numbers(K, len(values), n0) == table


def test_instanton_input_checks():
    with pytest.raises(InputError):
        instanton_numbers(QSeries([2, 1], 5), 3)
    with pytest.raises(InputError):
        instanton_numbers(QSeries([1, 1], 3), 5)
