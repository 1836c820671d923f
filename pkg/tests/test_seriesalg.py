from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PROPERTY_CASES, fractions, series_strategy
from cyops.errors import BadConstantTerm, NotInvertible, ZeroConstantDenominator
from cyops.seriesalg import (LaurentPoly, QSeries, RatFunc, RatPoly, factor_over_q,
                             hadamard_product, mseries_expand_rational, n_integrality_scan,
                             series_arith, series_compose, series_exp_log, series_revert)
from cyops.seriesalg.poly import falling_factorial_poly, poly_gcd, rational_roots
from cyops.seriesalg.qseries import _schoolbook, int_convolve

T = RatPoly.x()
polys = st.lists(fractions, min_size=0, max_size=6).map(RatPoly)


# polynomials -----------------------------------------------------------------

def test_poly_arithmetic_and_evaluation():
    p = (T + 1) * (T - 2)
    assert p == T**2 - T - 2
    assert p(Fraction(2)) == 0
    assert p.derivative() == 2 * T - 1
    assert p.shift(1) == (T + 2) * (T - 1)


@given(polys, polys.filter(lambda q: not q.is_zero()))
@settings(max_examples=PROPERTY_CASES)
def test_divmod_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_gcd_and_factorisation():
    a = (T - 1) ** 2 * (T + 3)
    b = (T - 1) * (T**2 + 1)
    assert poly_gcd(a, b) == T - 1
    const, facs = factor_over_q(5 * (T - 1) ** 2 * (T**2 + 1))
    assert const == 5
    assert sorted((f.degree, m) for f, m in facs) == [(1, 2), (2, 1)]
    assert rational_roots((2 * T - 1) * (T + 3) * (T**2 + 2)) == [(Fraction(-3), 1), (Fraction(1, 2), 1)]


def test_falling_factorial():
    ff = falling_factorial_poly(3)
    assert [ff(Fraction(k)) for k in range(5)] == [0, 0, 0, 6, 24]


def test_ratfunc_orders():
    f = RatFunc(T**2, (T - 1) ** 3)
    assert f.order_at(T - 1) == -3
    assert f.order_at_zero() == 2
    assert f.order_at_infinity() == 1
    assert RatFunc(T + 1, T + 1) == RatFunc(RatPoly.const(1))


# series ring ---------------------------------------------------------------------

@given(series_strategy(), series_strategy(), series_strategy())
@settings(max_examples=PROPERTY_CASES)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    m = min(a.trunc, b.trunc, c.trunc)
    assert (a - a).is_zero()
    assert a * QSeries.one(a.trunc) == a
    assert (a * b).trunc == min(a.trunc, b.trunc)
    assert (a + b + c).trunc == m


@given(series_strategy().filter(lambda s: s.coeffs[0] != 0))
@settings(max_examples=PROPERTY_CASES)
def test_inverse(a):
    assert a * a.inverse() == QSeries.one(a.trunc)
    assert series_arith(QSeries.one(a.trunc), a, "div") == a.inverse()


@given(st.lists(st.integers(-10**30, 10**30), min_size=0, max_size=60),
       st.lists(st.integers(-10**30, 10**30), min_size=0, max_size=60),
       st.integers(1, 80))
@settings(max_examples=PROPERTY_CASES)
def test_kronecker_matches_schoolbook(a, b, n):
    assert int_convolve(a, b, n) == (_schoolbook(a, b, n) + [0] * n)[:n]


def test_kronecker_with_zero_factor():
    # one side identically zero: the packing width must not collapse
    a = [10**40 + k for k in range(40)]
    assert int_convolve(a, [0] * 40, 40) == [0] * 40


@given(series_strategy(min_trunc=1).map(lambda s: QSeries((0,) + s.coeffs[1:], s.trunc)))
@settings(max_examples=PROPERTY_CASES)
def test_exp_log_inverse(a):
    e = series_exp_log(a, "exp")
    assert e.coeffs[0] == 1
    assert series_exp_log(e, "log") == a


def test_exp_of_t_is_factorial_series():
    e = QSeries.t(8).exp()
    assert list(e.coeffs) == [Fraction(1, factorial(k)) for k in range(9)]


def test_exp_log_errors():
    with pytest.raises(BadConstantTerm):
        series_exp_log(QSeries.one(4), "exp")
    with pytest.raises(BadConstantTerm):
        series_exp_log(QSeries.t(4), "log")


@given(st.integers(1, 12).flatmap(lambda m: st.tuples(
    st.just(m), fractions.filter(lambda x: x != 0), st.lists(fractions, min_size=m, max_size=m))))
@settings(max_examples=PROPERTY_CASES)
def test_reversion_round_trip(data):
    m, lead, rest = data
    a = QSeries([0, lead] + rest[:-1], m)
    b = series_revert(a)
    assert series_compose(a, b) == QSeries.t(m)
    assert series_compose(b, a) == QSeries.t(m)


def test_reversion_errors():
    with pytest.raises(NotInvertible):
        series_revert(QSeries([0, 0, 1], 4))
    with pytest.raises(BadConstantTerm):
        series_revert(QSeries([1, 1], 4))


def test_reversion_of_t_over_one_minus_t():
    # t/(1-t) inverts to t/(1+t)
    a = QSeries([0] + [1] * 10, 10)
    assert series_revert(a) == QSeries([0] + [(-1) ** (k + 1) for k in range(1, 11)], 10)


def test_theta_and_helpers():
    s = QSeries([1, 2, 3, 4], 3)
    assert s.theta() == QSeries([0, 2, 6, 12], 3)
    assert s.scale_var(2) == QSeries([1, 4, 12, 32], 3)
    assert s.substitute_power(2).coeffs[:5] == (1, 0, 2, 0, 3)
    assert s.mul_t(1) == QSeries([0, 1, 2, 3, 4], 4)
    assert s.derivative().trunc == 2


def test_hadamard():
    a = QSeries([1, 2, 3], 2)
    b = QSeries([4, 5, 6, 7], 3)
    assert hadamard_product(a, b) == QSeries([4, 10, 18], 2)


# multivariate --------------------------------------------------------------------

def test_laurent_arithmetic():
    x, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    w = (x + y + x**-1 * y**-1) ** 3
    assert w.constant_term() == 6  # multinomial 3!/(1!1!1!)
    assert (x * x**-1) == LaurentPoly.const(2, 1)


def test_rational_expansion_binomials():
    x, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    s = mseries_expand_rational(LaurentPoly.const(2, 1), 1 - x - y, 8)
    assert s.diagonal()[:5] == [comb(2 * n, n) for n in range(5)]


def test_rational_expansion_needs_constant():
    x = LaurentPoly.var(1, 0)
    with pytest.raises(ZeroConstantDenominator):
        mseries_expand_rational(LaurentPoly.const(1, 1), x, 5)


# integrality scan ----------------------------------------------------------------

def test_scan_integral_series():
    a = QSeries([comb(2 * n, n) for n in range(41)], 40)
    rep = n_integrality_scan(a)
    assert rep.integral and rep.strict


def test_scan_finds_n():
    # v_2(C(2n,n)) equals the binary digit sum of n, so C(2n,n)/4^n needs N = 4
    a = QSeries([Fraction(comb(2 * n, n), 4**n) for n in range(41)], 40)
    rep = n_integrality_scan(a)
    assert rep.integral and rep.N == 4 and rep.c == 1


def test_scan_rejects_exp_and_log():
    assert not n_integrality_scan(QSeries.t(40).exp()).integral
    log1p = QSeries([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, 41)], 40)
    rep = n_integrality_scan(log1p)
    assert not rep.integral and rep.unbounded
