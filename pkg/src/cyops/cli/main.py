"""Command line interface: ``cyops <command> ...``.

Exit codes: 0 success, 1 gate failure, 2 input error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from ..cygate import DEFAULT_D, DEFAULT_M, Grade, run_gate
from ..errors import CyopsError, ResourceCapExceeded
from ..frobenius import frobenius_basis, holomorphic_solution
from ..mirror import instanton_numbers, mirror_pipeline
from ..opcore.symbol import riemann_symbol
from ..opcore.theta import power_pullback, reciprocal_transform, rescale_coordinate, translate_point
from ..opfit import DEFAULT_MARGIN, search_operator
from ..seriesalg.qseries import QSeries, hadamard_product
from ..sources.congruence import dwork_check
from ..sources.constant_term import constant_term_series
from ..sources.diagonal import diagonal_of_rational
from ..sources.presets import SEQUENCES, SERIES, named_sequence, named_series
from ..sources.ramanujan import agreement_digits, guillera_six_sum
from .cache import ResultCache, default_cache_dir
from .parser import parse_laurent, variables_in
from .records import OperatorRecord, parse_record, serialize_record

EXIT_OK, EXIT_GATE_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def read_series(path: str | Path) -> QSeries:
    """One coefficient per line (integer or p/q), first line is a_0; '#' starts a comment."""
    values = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values.append(Fraction(line))
        except ValueError:
            from ..errors import ParseError

            raise ParseError(f"not a rational number: {line!r}", lineno, 1, {"p/q"}) from None
    if not values:
        from ..errors import InputError

        raise InputError(f"{path}: empty series file")
    return QSeries(values, len(values) - 1)


def format_series_lines(s: QSeries) -> str:
    return "\n".join(str(c) for c in s.coeffs)


def _load(path: str) -> tuple[str, OperatorRecord]:
    text = Path(path).read_text(encoding="utf-8")
    return text, parse_record(text)


def _cache(args) -> ResultCache | None:
    if args.no_cache:
        return None
    return ResultCache(args.cache_dir or default_cache_dir())


def _cached(args, text: str, command: str, params: dict, compute):
    cache = _cache(args)
    if cache is None:
        from .cache import encode

        return encode(compute())
    return cache.cached(serialize_record(parse_record(text)), command, params, compute)


# commands -------------------------------------------------------------------

def cmd_symbol(args, out) -> int:
    _, rec = _load(args.file)
    out.write(riemann_symbol(rec.operator()).to_text() + "\n")
    return EXIT_OK


def cmd_solve(args, out) -> int:
    text, rec = _load(args.file)
    op = rec.operator()

    def compute():
        if args.basis:
            fb = frobenius_basis(op, args.order)
            return {"parts": [list(fb.f(k).coeffs) for k in range(fb.n)]}
        return {"parts": [list(holomorphic_solution(op, args.order).coeffs)]}

    res = _cached(args, text, "solve", {"order": args.order, "basis": args.basis}, compute)
    for k, part in enumerate(res["parts"]):
        if args.basis:
            out.write(f"# f_{k}\n")
        out.write("\n".join(part) + "\n")
    return EXIT_OK


def _mirror(args, text: str, rec: OperatorRecord, M: int) -> dict:
    def compute():
        _, md = mirror_pipeline(rec.operator(), M)
        return {"q": list(md.q_of_t.coeffs), "t": list(md.t_of_q.coeffs),
                "K": list(md.K.coeffs) if md.K is not None else None}

    return _cached(args, text, "mirror", {"order": M}, compute)


def _scale(args, rec: OperatorRecord) -> Fraction:
    """--scale, else the record's n0 metadata, else 1."""
    return Fraction(args.scale if args.scale is not None else rec.meta("n0", "1"))


def _as_series(values: list[str]) -> QSeries:
    return QSeries([Fraction(v) for v in values], len(values) - 1)


def cmd_mirror(args, out) -> int:
    text, rec = _load(args.file)
    res = _mirror(args, text, rec, args.order)
    out.write(f"q(t) = {_as_series(res['q']).to_string()}\n")
    out.write(f"t(q) = {_as_series(res['t']).to_string()}\n")
    if res["K"] is not None:
        out.write(f"K(q) = {_as_series(res['K']).to_string('q')}\n")
    return EXIT_OK


def cmd_instantons(args, out) -> int:
    text, rec = _load(args.file)
    M = max(args.depth, args.order or 0)
    res = _mirror(args, text, rec, M)
    if res["K"] is None:
        from ..errors import NotOrderFour

        raise NotOrderFour(f"instanton numbers need order 4, got {rec.order}")
    table = instanton_numbers(_as_series(res["K"]), args.depth, _scale(args, rec))
    for d, n in table.entries:
        out.write(f"{d} {n}\n")
    return EXIT_OK


def cmd_gate(args, out) -> int:
    _, rec = _load(args.file)
    report = run_gate(rec.operator(), args.order, args.depth, _scale(args, rec))
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    return EXIT_GATE_FAIL if report.verdict.grade is Grade.FAILS else EXIT_OK


def cmd_fit(args, out) -> int:
    if args.source:
        need = (args.max_order + 1) * (args.max_degree + 1) + args.margin + args.max_degree
        s = named_series(args.source, args.terms or need)
    elif args.series_file:
        s = read_series(args.series_file)
    else:
        raise _UsageError("fit needs a series file or --source NAME")
    result = search_operator(s, args.max_order, args.max_degree, args.margin)
    meta = [("shape", f"{result.shape[0]},{result.shape[1]}"), ("equations", str(result.equations))]
    rec = OperatorRecord.from_operator(args.id, result.operator, meta)
    out.write(serialize_record(rec))
    return EXIT_OK


def cmd_hadamard(args, out) -> int:
    out.write(format_series_lines(hadamard_product(read_series(args.a), read_series(args.b))) + "\n")
    return EXIT_OK


def cmd_constant_terms(args, out) -> int:
    names = variables_in(args.laurent)
    W = parse_laurent(args.laurent, names)
    out.write(format_series_lines(constant_term_series(W, args.order)) + "\n")
    return EXIT_OK


def cmd_diagonal(args, out) -> int:
    names = variables_in(args.num, args.den)
    P = parse_laurent(args.num, names)
    Q = parse_laurent(args.den, names)
    out.write(format_series_lines(diagonal_of_rational(P, Q, args.order)) + "\n")
    return EXIT_OK


def cmd_dwork(args, out) -> int:
    rep = dwork_check(named_sequence(args.source), args.p, args.digits)
    if rep.ok:
        out.write(f"{args.source}: Dwork congruences hold mod {args.p} for n < {rep.checked}\n")
    else:
        n, lhs, rhs = rep.first_failure
        out.write(f"{args.source}: fails mod {args.p} at n = {n} ({lhs} != {rhs})\n")
    return EXIT_OK


def cmd_transform(args, out) -> int:
    _, rec = _load(args.file)
    op = rec.operator()
    if args.translate is not None:
        new, tag = translate_point(op, Fraction(args.translate)), f"translate({args.translate})"
    elif args.reciprocal:
        new, tag = reciprocal_transform(op), "reciprocal"
    elif args.pullback is not None:
        new, tag = power_pullback(op, args.pullback), f"pullback({args.pullback})"
    elif args.rescale is not None:
        new, tag = rescale_coordinate(op, Fraction(args.rescale)), f"rescale({args.rescale})"
    else:
        raise _UsageError("transform needs one of --translate, --reciprocal, --pullback, --rescale")
    out_rec = OperatorRecord.from_operator(f"{rec.id}-{tag}", new.canonical(), [("derived_from", rec.id)])
    out.write(serialize_record(out_rec))
    return EXIT_OK


def cmd_ramanujan(args, out) -> int:
    if args.preset != "guillera-6n":
        raise _UsageError(f"unknown preset {args.preset!r}")
    s = guillera_six_sum(args.terms)
    got = agreement_digits(s, 375, max(args.digits + 20, 60))
    verdict = "ok" if got >= args.digits else "short"
    out.write(f"partial sum of {args.terms} terms agrees with 375/pi^2 to {got} digits "
              f"(requested {args.digits}): {verdict}\n")
    return EXIT_OK


# wiring -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="cyops", description="Calabi-Yau operator toolkit")
    p.add_argument("--cache-dir", help="result cache directory (default: $CYOPS_CACHE or ~/.cache/cyops)")
    p.add_argument("--no-cache", action="store_true", help="disable the result cache")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    s = sub.add_parser("symbol", help="Riemann symbol of an operator record")
    s.add_argument("file")
    s.set_defaults(func=cmd_symbol)

    s = sub.add_parser("solve", help="holomorphic solution (or Frobenius basis) at a MUM point")
    s.add_argument("file")
    s.add_argument("--order", type=int, default=20)
    s.add_argument("--basis", action="store_true", help="print all Frobenius parts f_k")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("mirror", help="mirror map and Yukawa coupling")
    s.add_argument("file")
    s.add_argument("--order", type=int, default=20)
    s.set_defaults(func=cmd_mirror)

    s = sub.add_parser("instantons", help="instanton numbers")
    s.add_argument("file")
    s.add_argument("--depth", type=int, default=DEFAULT_D)
    s.add_argument("--scale", default=None, help="n0 (default: record metadata n0, else 1)")
    s.add_argument("--order", type=int, default=None, help="series truncation (default: depth)")
    s.set_defaults(func=cmd_instantons)

    s = sub.add_parser("gate", help="Calabi-Yau operator gate")
    s.add_argument("file")
    s.add_argument("--order", type=int, default=DEFAULT_M)
    s.add_argument("--depth", type=int, default=DEFAULT_D)
    s.add_argument("--scale", default=None, help="n0 (default: record metadata n0, else 1)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_gate)

    s = sub.add_parser("fit", help="find a minimal annihilating operator for a series")
    s.add_argument("series_file", nargs="?")
    s.add_argument("--source", choices=sorted(SERIES))
    s.add_argument("--terms", type=int, default=None)
    s.add_argument("--max-order", type=int, default=4)
    s.add_argument("--max-degree", type=int, default=4)
    s.add_argument("--margin", type=int, default=DEFAULT_MARGIN)
    s.add_argument("--id", default="fitted")
    s.set_defaults(func=cmd_fit)

    s = sub.add_parser("hadamard", help="coefficientwise product of two series files")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_hadamard)

    s = sub.add_parser("constant-terms", help="constant terms of powers of a Laurent polynomial")
    s.add_argument("--laurent", required=True)
    s.add_argument("--order", type=int, default=10)
    s.set_defaults(func=cmd_constant_terms)

    s = sub.add_parser("diagonal", help="diagonal of a rational function")
    s.add_argument("--num", required=True)
    s.add_argument("--den", required=True)
    s.add_argument("--order", type=int, default=10)
    s.set_defaults(func=cmd_diagonal)

    s = sub.add_parser("dwork", help="Dwork congruence check")
    s.add_argument("--source", required=True, choices=sorted(SEQUENCES))
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--digits", type=int, default=3)
    s.set_defaults(func=cmd_dwork)

    s = sub.add_parser("transform", help="transform an operator record")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--translate", metavar="P")
    g.add_argument("--reciprocal", action="store_true")
    g.add_argument("--pullback", type=int, metavar="K")
    g.add_argument("--rescale", metavar="N")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("ramanujan", help="partial sums of a Ramanujan-type series")
    s.add_argument("--preset", default="guillera-6n")
    s.add_argument("--terms", type=int, default=50)
    s.add_argument("--digits", type=int, default=40)
    s.set_defaults(func=cmd_ramanujan)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except _UsageError as exc:
        err.write(f"cyops: usage error: {exc}\n")
        return EXIT_INPUT
    except ResourceCapExceeded as exc:
        err.write(f"cyops: resource cap exceeded: {exc}\n")
        return EXIT_CAP
    except CyopsError as exc:
        err.write(f"cyops: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    except (OSError, KeyError, ValueError) as exc:
        err.write(f"cyops: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
