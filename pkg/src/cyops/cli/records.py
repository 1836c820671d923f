"""Line-oriented operator records.

    [operator]
    id = quintic
    order = 4
    degree = 1
    P0 = T^4
    P1 = -3125*T^4 - 6250*T^3 - 4375*T^2 - 1250*T - 120

    [metadata]
    source = free text

Blank lines and lines starting with ``#`` are ignored. The serializer emits
expanded polynomials, so serialize(parse(text)) reproduces canonical text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import ArityError, ParseError
from ..opcore.theta import ThetaOperator
from ..seriesalg.poly import RatPoly
from .parser import format_poly, parse_poly

_KEY = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_\-]*)\s*=\s*(.*?)\s*$")
_POLY_KEY = re.compile(r"^P(\d+)$")


@dataclass(frozen=True)
class OperatorRecord:
    id: str
    order: int
    degree: int
    polys: tuple[RatPoly, ...]
    metadata: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def operator(self) -> ThetaOperator:
        """The operator in canonical form."""
        return ThetaOperator(list(self.polys)).canonical()

    def raw_operator(self) -> ThetaOperator:
        return ThetaOperator(list(self.polys))

    @classmethod
    def from_operator(cls, rid: str, op: ThetaOperator, metadata=()) -> "OperatorRecord":
        return cls(rid, op.order, op.degree, tuple(op.polys), tuple(metadata))

    def meta(self, key: str, default: str | None = None) -> str | None:
        for k, v in self.metadata:
            if k == key:
                return v
        return default


def _int_value(value: str, key: str, line: int, col: int) -> int:
    if not re.fullmatch(r"\d+", value):
        raise ParseError(f"{key} must be a non-negative integer", line, col, {"integer"})
    return int(value)


def parse_record(text: str) -> OperatorRecord:
    section = None
    fields: dict[str, tuple[str, int, int]] = {}
    polys: dict[int, tuple[RatPoly, int]] = {}
    metadata: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("["):
            if stripped == "[operator]" and section is None:
                section = "operator"
                continue
            if stripped == "[metadata]" and section == "operator":
                section = "metadata"
                continue
            col = raw.index("[") + 1
            expected = {"[operator]"} if section is None else {"[metadata]", "key = value"}
            raise ParseError(f"unexpected section header {stripped!r}", lineno, col, expected)
        if section is None:
            raise ParseError("record must start with [operator]", lineno,
                             len(raw) - len(raw.lstrip()) + 1, {"[operator]"})
        m = _KEY.match(raw)
        if not m:
            raise ParseError("expected a key = value line", lineno,
                             len(raw) - len(raw.lstrip()) + 1, {"key = value"})
        key, value = m.group(1), m.group(2)
        vcol = m.start(2) + 1
        if section == "metadata":
            metadata.append((key, value))
            continue
        pm = _POLY_KEY.match(key)
        if pm:
            idx = int(pm.group(1))
            if idx in polys:
                raise ParseError(f"duplicate key {key}", lineno, m.start(1) + 1, set())
            polys[idx] = (parse_poly(value, "T", lineno, m.start(2)), lineno)
        elif key in ("id", "order", "degree"):
            if key in fields:
                raise ParseError(f"duplicate key {key}", lineno, m.start(1) + 1, set())
            fields[key] = (value, lineno, vcol)
        else:
            raise ParseError(f"unknown key {key!r}", lineno, m.start(1) + 1,
                             {"id", "order", "degree", "P<i>"})
    if section is None:
        raise ParseError("empty record", 1, 1, {"[operator]"})
    last = len(text.splitlines()) or 1
    for key in ("id", "order", "degree"):
        if key not in fields:
            raise ParseError(f"missing key {key!r}", last, 1, {key})
    rid = fields["id"][0]
    order = _int_value(*fields["order"][:1], "order", *fields["order"][1:])
    degree = _int_value(*fields["degree"][:1], "degree", *fields["degree"][1:])
    for idx, (p, lineno) in polys.items():
        if idx > degree:
            raise ArityError(f"P{idx} on line {lineno} exceeds the declared degree {degree}")
        if p.degree > order:
            raise ArityError(f"P{idx} on line {lineno} has degree {p.degree} in T, "
                             f"above the declared order {order}")
    missing = [f"P{i}" for i in range(degree + 1) if i not in polys]
    if missing:
        raise ParseError(f"missing {', '.join(missing)}", last, 1, set(missing))
    plist = tuple(polys[i][0] for i in range(degree + 1))
    if plist[-1].is_zero():
        raise ArityError(f"P{degree} vanishes, so the degree is below {degree}")
    if max(p.degree for p in plist) != order:
        raise ArityError(f"declared order {order} but the polynomials reach degree "
                         f"{max(p.degree for p in plist)}")
    return OperatorRecord(rid, order, degree, plist, tuple(metadata))


def serialize_record(rec: OperatorRecord) -> str:
    lines = ["[operator]", f"id = {rec.id}", f"order = {rec.order}", f"degree = {rec.degree}"]
    lines += [f"P{i} = {format_poly(p)}" for i, p in enumerate(rec.polys)]
    if rec.metadata:
        lines += ["", "[metadata]"] + [f"{k} = {v}" for k, v in rec.metadata]
    return "\n".join(lines) + "\n"


def read_record(path: str | Path) -> OperatorRecord:
    return parse_record(Path(path).read_text(encoding="utf-8"))
