"""Diagonals of rational functions and algebraic series."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from ..errors import SingularBranch, ZeroConstantDenominator
from ..seriesalg.multivariate import LaurentPoly
from ..seriesalg.qseries import QSeries


def diagonal_of_rational(P: LaurentPoly, Q: LaurentPoly, M: int) -> QSeries:
    """sum_k [x_1^k ... x_n^k](P/Q) t^k for k <= M.

    The coefficients on the box [0, M]^n only depend on each other (every
    recurrence step subtracts a non-negative vector), so the expansion is run
    on that box in lexicographic order instead of the full simplex of total
    degree n*M.
    """
    if P.dim != Q.dim:
        raise ValueError("numerator and denominator live in different rings")
    if not (P.is_polynomial() and Q.is_polynomial()):
        raise ValueError("numerator and denominator must have non-negative exponents")
    n = P.dim
    zero = (0,) * n
    q0 = Q.terms.get(zero, Fraction(0))
    if q0 == 0:
        raise ZeroConstantDenominator("denominator vanishes at the origin")
    side = M + 1
    strides = [side ** (n - 1 - i) for i in range(n)]

    def index(e) -> int:
        return sum(x * s for x, s in zip(e, strides))

    rest = [(f, c, index(f)) for f, c in Q.terms.items() if f != zero and max(f) <= M]
    p_terms = {index(e): c for e, c in P.terms.items() if max(e, default=0) <= M}
    integral = (q0 in (1, -1) and all(c.denominator == 1 for c in Q.terms.values())
                and all(c.denominator == 1 for c in P.terms.values()))
    if integral:
        sign = int(q0)
        rest_i = [(f, int(c), off) for f, c, off in rest]
        p_i = {k: int(v) for k, v in p_terms.items()}
        F = [0] * side**n
        for e in product(range(side), repeat=n):
            k = index(e)
            v = p_i.get(k, 0)
            for f, c, off in rest_i:
                if all(x >= y for x, y in zip(e, f)):
                    v -= c * F[k - off]
            F[k] = v * sign
        diag_step = sum(strides)
        return QSeries([F[j * diag_step] for j in range(side)], M)
    inv = 1 / q0
    F = [Fraction(0)] * side**n
    for e in product(range(side), repeat=n):
        k = index(e)
        v = p_terms.get(k, Fraction(0))
        for f, c, off in rest:
            if all(x >= y for x, y in zip(e, f)):
                v -= c * F[k - off]
        F[k] = v * inv
    diag_step = sum(strides)
    return QSeries([F[j * diag_step] for j in range(side)], M)


def _bivariate_rows(R: LaurentPoly) -> dict[int, QSeries]:
    """R(t, y) as a map y-degree -> polynomial in t (as a coefficient dict)."""
    rows: dict[int, dict[int, Fraction]] = {}
    for (i, j), c in R.terms.items():
        if i < 0 or j < 0:
            raise ValueError("bivariate polynomial must have non-negative exponents")
        rows.setdefault(j, {})[i] = c
    return rows


def _eval_in_y(rows, phi: QSeries) -> QSeries:
    m = phi.trunc
    acc = QSeries.zero(m)
    for j in range(max(rows), -1, -1):
        coeffs = rows.get(j, {})
        row = QSeries([coeffs.get(i, 0) for i in range(m + 1)], m)
        acc = acc * phi + row
    return acc


def _derivative_y(R: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(2, {(i, j - 1): c * j for (i, j), c in R.terms.items() if j})


def algebraic_series_solve(R: LaurentPoly, M: int) -> QSeries:
    """The unique phi with phi(0) = 0 and R(t, phi(t)) = 0, by Newton iteration.

    R is a polynomial in (t, y) given as a two-variable LaurentPoly.
    """
    if R.terms.get((0, 0), 0) != 0:
        raise SingularBranch("R(0,0) must vanish")
    Ry = _derivative_y(R)
    if Ry.terms.get((0, 0), 0) == 0:
        raise SingularBranch("dR/dy vanishes at the origin")
    rows, drows = _bivariate_rows(R), _bivariate_rows(Ry)
    phi = QSeries.zero(0)
    prec = 0
    while prec < M:
        prec = min(2 * prec + 1, M)
        phi = QSeries(phi.coeffs, prec)
        phi = phi - _eval_in_y(rows, phi) / _eval_in_y(drows, phi)
    return QSeries(phi.coeffs, M)


def furstenberg_embed(R: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """(P, Q) in variables (x, y) with Delta_2(P/Q) = phi.

    F = y R_y(xy, y) / (R(xy, y) / y).
    """
    if R.terms.get((0, 0), 0) != 0:
        raise SingularBranch("R(0,0) must vanish")
    Ry = _derivative_y(R)
    if Ry.terms.get((0, 0), 0) == 0:
        raise SingularBranch("dR/dy vanishes at the origin")

    def sub(S: LaurentPoly) -> LaurentPoly:  # S(xy, y)
        return LaurentPoly(2, {(i, i + j): c for (i, j), c in S.terms.items()})

    P = sub(Ry) * LaurentPoly.var(2, 1)
    Q = LaurentPoly(2, {(a, b - 1): c for (a, b), c in sub(R).terms.items()})
    return P, Q
