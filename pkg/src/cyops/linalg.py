"""Exact linear algebra: fraction-free elimination and modular rank."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

MERSENNE_61 = (1 << 61) - 1


def rank_mod_p(rows: Sequence[Sequence[int]], p: int = MERSENNE_61) -> int:
    """Rank of an integer matrix modulo a prime p."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        prow = [x * inv % p for x in m[rank]]
        m[rank] = prow
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns (rows, pivot columns).

    Every intermediate entry is an exact integer (a minor of the input), so
    divisions by the previous pivot are exact.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pv = pr[col]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[col]
            if f:
                m[i] = [(pv * row[j] - f * pr[j]) // prev if j >= col else 0 for j in range(ncols)]
            else:
                m[i] = [(pv * row[j]) // prev if j >= col else 0 for j in range(ncols)]
        prev = pv
        pivots.append(col)
        r += 1
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} over Q, one vector per free column."""
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    ncols = len(rows[0])
    ech, pivots = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pc = pivots[k]
            row = ech[k]
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(x)
    return basis
