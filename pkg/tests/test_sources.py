from fractions import Fraction
from math import comb, factorial

import pytest

from cyops.errors import NonIntegralSequence, SingularBranch, UnboundedRegion
from cyops.seriesalg import LaurentPoly, QSeries
from cyops.sources import (Affine, Binom, BinomialSumSpec, IntegerSequence, SumIndex,
                           agreement_digits, algebraic_series_solve, apery_spec,
                           binomial_sum_series, borel_laplace, constant_term_series,
                           diagonal_of_rational, dwork_check, factorial_ratio_series,
                           furstenberg_embed, grassmannian_g27_spec, guillera_six_sum)
from cyops.sources.congruence import base_digits
from cyops.sources.presets import named_sequence, named_series, quintic_potential

A = Affine.of


def quintic_terms(M):
    return [factorial(5 * n) // factorial(n) ** 5 for n in range(M + 1)]


def test_constant_terms_of_quintic_potential():
    s = constant_term_series(quintic_potential(), 30)
    assert [s.coeffs[5 * n] for n in range(7)] == quintic_terms(6)
    assert all(s.coeffs[k] == 0 for k in range(31) if k % 5)


def test_constant_terms_small_potential():
    x = LaurentPoly.var(1, 0)
    s = constant_term_series(x + x**-1, 10)
    assert [s.coeffs[2 * n] for n in range(6)] == [comb(2 * n, n) for n in range(6)]


def test_factorial_ratio_and_borel_laplace():
    y0 = factorial_ratio_series([5], [1] * 5, 6)
    assert list(y0.coeffs) == quintic_terms(6)
    a = QSeries([Fraction(1, factorial(m // 5) ** 5) if m % 5 == 0 else 0 for m in range(31)], 30)
    assert borel_laplace(a) == y0.substitute_power(5).truncate(30)


def test_unbalanced_factorial_ratio_warns():
    with pytest.warns(UserWarning):
        factorial_ratio_series([2], [1], 4)


def test_binomial_sums_match_direct_evaluation():
    apery = binomial_sum_series(apery_spec(), 6)
    assert list(apery.coeffs) == [sum(comb(n, k) ** 2 * comb(n + k, k) for k in range(n + 1))
                                  for n in range(7)]
    g27 = binomial_sum_series(grassmannian_g27_spec(), 6)
    assert list(g27.coeffs) == [
        sum(comb(n, k) ** 2 * comb(n, l) ** 2 * comb(k + l, n) * comb(2 * n - k, n)
            for k in range(n + 1) for l in range(n + 1))
        for n in range(7)]


def test_binomial_sum_needs_bounds():
    spec = BinomialSumSpec(indices=(SumIndex("k", A(0), None),), term=(Binom(A(n=1), A(k=1)),))
    with pytest.raises(UnboundedRegion):
        binomial_sum_series(spec, 4)
    spec = BinomialSumSpec(indices=(SumIndex("k", A(0), A(m=1)),), term=(Binom(A(n=1), A(k=1)),))
    with pytest.raises(UnboundedRegion):
        binomial_sum_series(spec, 4)


def test_diagonal_of_rational_function():
    x, y, z = (LaurentPoly.var(3, i) for i in range(3))
    P = LaurentPoly.const(3, 4)
    Q = 4 - (x + y) * (1 + z)
    d = diagonal_of_rational(P, Q, 8)
    assert list(d.coeffs) == [Fraction(comb(2 * n, n) ** 2, 16**n) for n in range(9)]


def catalan_relation():
    # y = t (1 + y)^2
    t, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    return y - t * (1 + y) ** 2


def test_algebraic_series_catalan():
    phi = algebraic_series_solve(catalan_relation(), 8)
    catalan = [comb(2 * n, n) // (n + 1) for n in range(1, 9)]
    assert list(phi.coeffs[1:]) == catalan
    assert catalan == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_furstenberg_embedding_gives_diagonal():
    R = catalan_relation()
    P, Q = furstenberg_embed(R)
    assert diagonal_of_rational(P, Q, 8) == algebraic_series_solve(R, 8)


def test_algebraic_solve_singular_branch():
    t, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    with pytest.raises(SingularBranch):
        algebraic_series_solve(y**2 - t, 5)
    with pytest.raises(SingularBranch):
        algebraic_series_solve(y - t + 1, 5)


def test_base_digits():
    assert base_digits(0, 3) == [0]
    assert base_digits(11, 3) == [2, 0, 1]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_quintic_sequence_satisfies_dwork(p):
    rep = dwork_check(named_sequence("quintic"), p, 3)
    assert rep.ok and rep.checked == p**3 + 1


def test_dwork_detects_failure():
    # a_n = n + 2: a_5 = 7 = 2 but a_0 a_1 = 6 = 1 mod 5
    rep = dwork_check(IntegerSequence(lambda n: n + 2), 5, 2)
    assert not rep.ok
    assert rep.first_failure == (5, 2, 1)


def test_dwork_rejects_non_integers():
    with pytest.raises(NonIntegralSequence):
        dwork_check(IntegerSequence(lambda n: Fraction(1, n + 1)), 3, 2)


def test_integer_sequence_memo_and_list():
    calls = []
    seq = IntegerSequence(lambda n: calls.append(n) or n * n)
    assert seq.values(4) == [0, 1, 4, 9, 16]
    seq[2]
    assert calls == [0, 1, 2, 3, 4]
    short = IntegerSequence.from_list([1, 2])
    with pytest.raises(IndexError):
        short[5]


def test_named_series():
    assert list(named_series("apery", 4).coeffs) == [1, 3, 19, 147, 1251]
    with pytest.raises(KeyError):
        named_series("nope", 3)


def test_guillera_sum_agrees_with_pi():
    assert agreement_digits(guillera_six_sum(50)) >= 40
    assert agreement_digits(guillera_six_sum(2)) < 20
