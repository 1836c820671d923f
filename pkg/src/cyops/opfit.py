"""Recovering an annihilating Theta-form operator from a truncated series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .errors import AmbiguousKernel, InsufficientTruncation, NotFound
from .linalg import nullspace, rank_mod_p
from .opcore.theta import ThetaOperator, apply_operator
from .seriesalg.poly import RatPoly
from .seriesalg.qseries import QSeries

DEFAULT_MARGIN = 10


@dataclass(frozen=True)
class FitResult:
    operator: ThetaOperator
    shape: tuple[int, int]
    equations: int
    shapes_tried: int


def shape_order(max_order: int, max_degree: int) -> list[tuple[int, int]]:
    """Candidate (order, degree) pairs sorted by (order + degree, order)."""
    shapes = [(n, r) for n in range(1, max_order + 1) for r in range(max_degree + 1)]
    return sorted(shapes, key=lambda s: (s[0] + s[1], s[0]))


def _system(s: QSeries, n: int, r: int, neq: int) -> list[list[int]]:
    """Rows m = 0..neq-1 of sum_{i,j} c_ij (m-i)^j s_(m-i), scaled to integers.

    Unknown c_ij sits in column i*(n+1) + j.
    """
    rows = []
    width = (n + 1) * (r + 1)
    for m in range(neq):
        row = [Fraction(0)] * width
        for i in range(min(r, m) + 1):
            v = s.coeffs[m - i]
            if not v:
                continue
            base = m - i
            pw = Fraction(1)
            for j in range(n + 1):
                row[i * (n + 1) + j] = v * pw
                pw *= base
        den = reduce(lcm, (x.denominator for x in row), 1)
        rows.append([int(x * den) for x in row])
    return rows


def _to_operator(vec: list[Fraction], n: int, r: int) -> ThetaOperator:
    den = reduce(lcm, (x.denominator for x in vec), 1)
    ints = [int(x * den) for x in vec]
    g = reduce(gcd, ints, 0)
    ints = [x // g for x in ints]
    polys = [RatPoly(ints[i * (n + 1):(i + 1) * (n + 1)]) for i in range(r + 1)]
    return ThetaOperator(polys).strip_t().canonical()


def verify_annihilation(op: ThetaOperator, s: QSeries, slack: int = 0) -> bool:
    """True iff op(s) vanishes through every order the truncation allows."""
    if s.trunc < op.degree + slack:
        raise InsufficientTruncation(f"series order {s.trunc} below degree {op.degree} + slack {slack}")
    return apply_operator(op, s).is_zero()


def search_operator(s: QSeries, max_order: int, max_degree: int,
                    margin: int = DEFAULT_MARGIN) -> FitResult:
    need = (max_order + 1) * (max_degree + 1) + margin + max_degree
    if s.trunc < need:
        raise InsufficientTruncation(f"caps ({max_order}, {max_degree}) with margin {margin} need "
                                     f"order {need}, series has {s.trunc}")
    tried = 0
    for n, r in shape_order(max_order, max_degree):
        tried += 1
        unknowns = (n + 1) * (r + 1)
        neq = unknowns + margin
        rows = _system(s, n, r, neq)
        if rank_mod_p(rows) == unknowns:
            continue  # full column rank mod p forces a trivial kernel over Q
        kernel = nullspace(rows)
        if not kernel:
            continue
        if len(kernel) > 1:
            raise AmbiguousKernel((n, r), len(kernel))
        op = _to_operator(kernel[0], n, r)
        if op.order != n or op.degree != r:
            continue  # a smaller-shape solution padded out; cannot happen past earlier shapes
        if verify_annihilation(op, s):
            return FitResult(op, (n, r), neq, tried)
    raise NotFound(f"no annihilating operator within order {max_order}, degree {max_degree}")


def fit_operator(s: QSeries, max_order: int, max_degree: int,
                 margin: int = DEFAULT_MARGIN) -> ThetaOperator:
    """Minimal-shape operator annihilating s, in canonical form."""
    return search_operator(s, max_order, max_degree, margin).operator
