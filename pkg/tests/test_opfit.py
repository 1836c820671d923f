import pytest
from hypothesis import given, settings, strategies as st

from conftest import PROPERTY_CASES
from cyops import corpus
from cyops.errors import AmbiguousKernel, InsufficientTruncation, NotFound
from cyops.frobenius import holomorphic_solution
from cyops.opcore import ThetaOperator, apply_operator
from cyops.opfit import fit_operator, search_operator, shape_order, verify_annihilation
from cyops.seriesalg import QSeries, RatPoly
from cyops.sources.presets import named_series

T = RatPoly.x()
M = 40


def shape_key(shape):
    n, r = shape
    return (n + r, n)


@st.composite
def planted(draw):
    # MUM at 0: P0 = Theta^n, the remaining P_i small of degree <= n
    n = draw(st.integers(1, 2))
    r = draw(st.integers(1, 2))
    coeff = st.integers(-4, 4)
    polys = [T**n]
    for i in range(1, r + 1):
        cs = draw(st.lists(coeff, min_size=n + 1, max_size=n + 1))
        polys.append(RatPoly(cs))
    if polys[-1].is_zero():
        polys[-1] = RatPoly.const(draw(st.integers(1, 4)))
    return ThetaOperator(polys)


@given(planted())
@settings(max_examples=PROPERTY_CASES)
def test_planted_operator_recovery(op):
    s = holomorphic_solution(op, M)
    res = search_operator(s, 2, 2)
    fitted = res.operator
    assert apply_operator(fitted, s).is_zero()
    assert shape_key(res.shape) <= shape_key((op.order, op.degree))
    if res.shape == (op.order, op.degree):
        assert fitted.equivalent(op)


def test_shape_order():
    assert shape_order(2, 1)[:3] == [(1, 0), (1, 1), (2, 0)]


def test_recovers_quintic():
    s = named_series("quintic", 30)
    assert fit_operator(s, 4, 1).equivalent(corpus.load("quintic").operator())


def test_recovers_aesz25():
    s = named_series("aesz25", 40)
    assert fit_operator(s, 4, 2).equivalent(corpus.load("aesz25").operator())


def test_insufficient_truncation():
    with pytest.raises(InsufficientTruncation):
        search_operator(named_series("quintic", 10), 4, 1)
    with pytest.raises(InsufficientTruncation):
        verify_annihilation(ThetaOperator([T, T, T]), QSeries.one(1))


def test_not_found():
    # sum t^n / (n!)^5 needs order 5
    with pytest.raises(NotFound):
        fit_operator(named_series("bessel5", 40), 4, 1)


def test_ambiguous_kernel():
    # the zero series is killed by every operator, so the first kernel is not a line
    with pytest.raises(AmbiguousKernel) as exc:
        search_operator(QSeries.zero(40), 2, 2)
    assert exc.value.shape == (1, 0) and exc.value.dimension == 2
