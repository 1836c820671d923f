from fractions import Fraction
from math import comb

import pytest

from cyops import corpus
from cyops.cygate import Grade, run_gate
from cyops.opcore import ThetaOperator, rescale_coordinate
from cyops.opfit import fit_operator
from cyops.seriesalg import QSeries, RatPoly

T = RatPoly.x()


def load(name):
    return corpus.load(name).operator()


def test_quintic_is_calabi_yau():
    rep = run_gate(load("quintic"), M=30, D=5, n0=5)
    assert rep.verdict.grade is Grade.CALABI_YAU
    assert str(rep.verdict) == "CalabiYau"
    assert rep.fuchsian and rep.self_dual.q_zero and rep.mum_at_0
    assert [int(v) for v in rep.instantons.table.values()][:3] == [2875, 609250, 317206375]


@pytest.mark.parametrize("name", ["aesz15", "aesz25", "aesz245"])
def test_corpus_operators_pass(name):
    assert run_gate(load(name), M=30, D=5).verdict.grade is Grade.CALABI_YAU


def test_bogner_instanton_denominators():
    rep = run_gate(load("bogner"), M=30, D=8)
    assert str(rep.verdict) == "Fails(instanton_integrality)"
    dens = dict(rep.instantons.non_integral)
    assert {p: dens[p] for p in (3, 5, 7)} == {3: 9, 5: 25, 7: 49}
    assert rep.instantons.first_non_integral == (3, 9)
    assert rep.y0.integral and rep.q.integral and rep.K.integral


def test_irregular_operator_fails_many_checks():
    rep = run_gate(ThetaOperator([T**4, T]), M=20, D=4)
    assert rep.verdict.grade is Grade.FAILS
    assert "fuchsian" in rep.verdict.failures
    assert "self_dual" in rep.verdict.failures
    assert "mum_at_0" not in rep.verdict.failures


def test_order_two_operator_records_stage_error():
    rep = run_gate(load("legendre"), M=20, D=4)
    assert rep.verdict.grade is Grade.FAILS
    stages = [s for s, _ in rep.errors]
    assert "q_quantity" in stages


@pytest.mark.parametrize("name", ["quintic", "aesz25"])
@pytest.mark.parametrize("N", [2, 3])
def test_grade_invariant_under_positive_rescaling(name, N):
    base = run_gate(load(name), M=30, D=4).verdict
    moved = run_gate(rescale_coordinate(load(name), N), M=30, D=4).verdict
    assert moved == base


def test_symmetric_cube_is_trivial():
    # the cube of the Legendre-type period satisfies an order-4 operator with K = 1
    a = QSeries([comb(2 * n, n) ** 2 for n in range(61)], 60)
    op = fit_operator(a * a * a, 4, 4)
    assert op.order == 4
    rep = run_gate(op, M=30, D=6)
    assert rep.verdict.grade is Grade.CALABI_YAU
    assert all(v == 0 for v in rep.instantons.table.values())


def test_report_is_deterministic():
    a = run_gate(load("aesz245"), M=20, D=4)
    b = run_gate(load("aesz245"), M=20, D=4)
    assert a.to_json() == b.to_json()
    assert a.to_text() == b.to_text()
    assert '"verdict": "CalabiYau"' in a.to_json()
    assert a.n0 == Fraction(1)
