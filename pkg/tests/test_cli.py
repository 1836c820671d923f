import json
from fractions import Fraction
from io import StringIO

import pytest
from hypothesis import given, settings, strategies as st

from conftest import PROPERTY_CASES, fractions
from cyops import corpus
from cyops.cli import (OperatorRecord, format_poly, parse_laurent, parse_poly, parse_record,
                       serialize_record)
from cyops.cli.cache import ResultCache, cache_key
from cyops.cli.main import main
from cyops.errors import ArityError, ParseError
from cyops.seriesalg import LaurentPoly, RatPoly

T = RatPoly.x()


def run(*argv):
    out, err = StringIO(), StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


# polynomial parser ---------------------------------------------------------------

def test_parse_poly_expressions():
    assert parse_poly("(T+1)^2 - 2*T") == T**2 + 1
    assert parse_poly("-3/4*T^3 + T") == -Fraction(3, 4) * T**3 + T
    with pytest.raises(ParseError):
        parse_poly("2 T")  # products need an explicit "*"


def test_parse_error_reports_column():
    with pytest.raises(ParseError) as exc:
        parse_poly("T^^2")
    assert exc.value.column == 3
    assert "integer exponent" in exc.value.expected
    with pytest.raises(ParseError):
        parse_poly("T^-1")


def test_parse_laurent():
    x, y = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    assert parse_laurent("x + y + (x*y)^-1", ("x", "y")) == x + y + x**-1 * y**-1
    assert parse_laurent("x^-2", ("x", "y")) == x**-2


def test_format_poly():
    assert format_poly(RatPoly()) == "0"
    assert format_poly(-3 * T**2 + Fraction(1, 2)) == "-3*T^2 + 1/2"


# records -------------------------------------------------------------------------

QUINTIC_FACTORED = """\
# the quintic, written by hand
[operator]
id = quintic
order = 4
degree = 1
P0 = T^4
P1 = -5*(5*T+1)*(5*T+2)*(5*T+3)*(5*T+4)
"""


def test_factored_quintic_parses_and_canonicalizes():
    rec = parse_record(QUINTIC_FACTORED)
    assert rec.operator() == corpus.load("quintic").operator()
    assert rec.metadata == ()


def test_aesz22_record_has_six_polynomials():
    rec = corpus.load("aesz22")
    assert rec.degree == 5 and len(rec.polys) == 6
    assert rec.polys[0] == 49 * T**4


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_byte_round_trip(name):
    text = corpus.record_text(name)
    assert serialize_record(parse_record(text)) == text


def test_empty_metadata_emits_no_section():
    rec = OperatorRecord("x", 1, 1, (T, -T))
    text = serialize_record(rec)
    assert "[metadata]" not in text
    assert parse_record(text) == rec


@pytest.mark.parametrize("text,exc", [
    ("[operator]\nid = a\norder = 1\ndegree = 0\nP0 = T\nP1 = T\n", ArityError),
    ("[operator]\nid = a\norder = 1\ndegree = 1\nP0 = T^2\nP1 = T\n", ArityError),
    ("[operator]\nid = a\norder = 1\ndegree = 1\nP0 = T\nP1 = 0\n", ArityError),
    ("[operator]\nid = a\norder = 3\ndegree = 1\nP0 = T\nP1 = T\n", ArityError),
    ("[operator]\nid = a\norder = 1\ndegree = 1\nP0 = T\n", ParseError),
    ("[operator]\nid = a\nid = b\norder = 1\ndegree = 0\nP0 = T\n", ParseError),
    ("[operator]\nid = a\nfoo = 1\norder = 1\ndegree = 0\nP0 = T\n", ParseError),
    ("id = a\n", ParseError),
    ("", ParseError),
])
def test_malformed_records(text, exc):
    with pytest.raises(exc):
        parse_record(text)


def test_parse_error_line_of_bad_polynomial():
    text = "[operator]\nid = a\norder = 1\ndegree = 0\nP0 = T +* 1\n"
    with pytest.raises(ParseError) as e:
        parse_record(text)
    assert e.value.line == 5 and e.value.column == 9


ident = st.from_regex(r"[a-z][a-z0-9_]{0,8}", fullmatch=True)
meta_value = st.from_regex(r"[A-Za-z0-9.,:/+-]([A-Za-z0-9 .,:/+-]{0,20}[A-Za-z0-9.,:/+-])?",
                           fullmatch=True)


@st.composite
def records(draw):
    order = draw(st.integers(0, 4))
    degree = draw(st.integers(0, 3))
    poly = st.lists(fractions, min_size=order + 1, max_size=order + 1).map(RatPoly)
    polys = [draw(poly) for _ in range(degree + 1)]
    if polys[-1].is_zero():
        polys[-1] = RatPoly.const(1)
    top = RatPoly([0] * order + [draw(st.integers(1, 9))])
    i = draw(st.integers(0, degree))
    if max(p.degree for p in polys) != order:
        polys[i] = polys[i] + top
    if polys[-1].is_zero():
        polys[-1] = top
    meta = draw(st.lists(st.tuples(ident, meta_value), max_size=4))
    return OperatorRecord(draw(ident), order, degree, tuple(polys), tuple(meta))


@given(records())
@settings(max_examples=PROPERTY_CASES)
def test_record_round_trip_property(rec):
    text = serialize_record(rec)
    back = parse_record(text)
    assert back == rec
    assert serialize_record(back) == text


# cache ---------------------------------------------------------------------------

def test_cache_hit_matches_recompute(tmp_path):
    cache = ResultCache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return {"values": [Fraction(1, 3), 2]}

    text = corpus.record_text("quintic")
    first = cache.cached(text, "demo", {"order": 3}, compute)
    second = cache.cached(text, "demo", {"order": 3}, compute)
    assert first == second == {"values": ["1/3", "2"]}
    assert len(calls) == 1
    assert cache_key(text, "demo", {"order": 3}) != cache_key(text, "demo", {"order": 4})
    assert not list(tmp_path.glob(".tmp-*"))


def test_cli_cache_agrees_with_fresh_run(tmp_path):
    path = corpus_file(tmp_path, "quintic")
    cache_dir = str(tmp_path / "cache")
    fresh = run("--no-cache", "mirror", path, "--order", "6")
    cold = run("--cache-dir", cache_dir, "mirror", path, "--order", "6")
    warm = run("--cache-dir", cache_dir, "mirror", path, "--order", "6")
    assert fresh == cold == warm
    assert len(list((tmp_path / "cache").glob("*.json"))) == 1


def test_damaged_cache_entry_is_a_miss(tmp_path):
    cache = ResultCache(tmp_path)
    key = cache_key("r", "c", {})
    tmp_path.joinpath(f"{key}.json").write_text("{not json")
    assert cache.cached("r", "c", {}, lambda: [1]) == ["1"]


# command line --------------------------------------------------------------------

def corpus_file(tmp_path, name):
    p = tmp_path / f"{name}.op"
    p.write_text(corpus.record_text(name))
    return str(p)


def test_cli_instantons(tmp_path):
    code, out, _ = run("--no-cache", "instantons", corpus_file(tmp_path, "quintic"), "--depth", "3")
    assert code == 0
    assert out.split("\n")[:3] == ["1 2875", "2 609250", "3 317206375"]


def test_cli_solve_and_symbol(tmp_path):
    path = corpus_file(tmp_path, "quintic")
    code, out, _ = run("--no-cache", "solve", path, "--order", "3")
    assert code == 0 and out.split() == ["1", "120", "113400", "168168000"]
    code, out, _ = run("symbol", path)
    assert code == 0 and "1/3125" in out


def test_cli_gate_exit_codes(tmp_path):
    code, out, _ = run("gate", corpus_file(tmp_path, "quintic"), "--order", "20", "--depth", "3",
                       "--json")
    assert code == 0 and json.loads(out)["verdict"] == "CalabiYau"
    code, out, _ = run("gate", corpus_file(tmp_path, "bogner"), "--order", "20", "--depth", "4")
    assert code == 1 and "Fails(instanton_integrality)" in out


def test_cli_input_errors(tmp_path):
    bad = tmp_path / "bad.op"
    bad.write_text("[operator]\nid = a\norder = 1\ndegree = 0\nP0 = T^^2\n")
    code, _, err = run("symbol", str(bad))
    assert code == 2 and "column" in err
    assert run("symbol", str(tmp_path / "missing.op"))[0] == 2
    assert run("no-such-command")[0] == 2


def test_cli_resource_cap(tmp_path):
    # the singular points are the roots of 1 + 2 t^5, beyond the number-field cap
    p = tmp_path / "cap.op"
    p.write_text("[operator]\nid = cap\norder = 1\ndegree = 5\nP0 = T\nP1 = 0\nP2 = 0\n"
                 "P3 = 0\nP4 = 0\nP5 = 2*T + 1\n")
    code, _, err = run("symbol", str(p))
    assert code == 3 and "cap" in err


def test_cli_transform_and_fit(tmp_path):
    code, out, _ = run("transform", corpus_file(tmp_path, "quintic"), "--rescale", "1/3125")
    assert code == 0
    rec = parse_record(out)
    assert rec.id == "quintic-rescale(1/3125)" and rec.meta("derived_from") == "quintic"
    code, out, _ = run("fit", "--source", "quintic", "--max-order", "4", "--max-degree", "1",
                       "--id", "q")
    assert code == 0
    assert parse_record(out).operator() == corpus.load("quintic").operator()


def test_cli_sources(tmp_path):
    code, out, _ = run("constant-terms", "--laurent", "x + x^-1", "--order", "4")
    assert code == 0 and out.split() == ["1", "0", "2", "0", "6"]
    code, out, _ = run("diagonal", "--num", "1", "--den", "1 - x - y", "--order", "3")
    assert out.split() == ["1", "2", "6", "20"]
    code, out, _ = run("dwork", "--source", "quintic", "-p", "3", "--digits", "2")
    assert code == 0 and "hold" in out
    code, out, _ = run("ramanujan", "--terms", "50", "--digits", "40")
    assert code == 0 and out.rstrip().endswith("ok")
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text("1\n2\n3\n")
    b.write_text("4\n5\n6\n")
    code, out, _ = run("hadamard", str(a), str(b))
    assert out.split() == ["4", "10", "18"]
