"""Finite nested sums of products of binomial coefficients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from ..errors import UnboundedRegion
from ..seriesalg.qseries import QSeries


@dataclass(frozen=True)
class Affine:
    """const + sum coeffs[v] * v over named integer variables."""

    const: int = 0
    coeffs: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, const: int = 0, **coeffs: int) -> "Affine":
        return cls(const, tuple(sorted(coeffs.items())))

    def __call__(self, env: dict[str, int]) -> int:
        return self.const + sum(c * env[v] for v, c in self.coeffs)

    def variables(self) -> set[str]:
        return {v for v, _ in self.coeffs}


@dataclass(frozen=True)
class SumIndex:
    name: str
    lower: Affine | None
    upper: Affine | None


@dataclass(frozen=True)
class Binom:
    top: Affine
    bottom: Affine
    power: int = 1


@dataclass(frozen=True)
class SignPower:
    """(-1)^exponent."""

    exponent: Affine


@dataclass(frozen=True)
class BinomialSumSpec:
    indices: tuple[SumIndex, ...]
    term: tuple[Binom | SignPower, ...]
    outer: str = "n"
    name: str = ""


def binom0(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _validate(spec: BinomialSumSpec) -> None:
    bound = {spec.outer}
    for idx in spec.indices:
        if idx.lower is None or idx.upper is None:
            raise UnboundedRegion(f"index {idx.name} lacks a finite bound")
        free = (idx.lower.variables() | idx.upper.variables()) - bound
        if free:
            raise UnboundedRegion(f"bounds of {idx.name} use unbound variables {sorted(free)}")
        bound.add(idx.name)
    for f in spec.term:
        used = f.exponent.variables() if isinstance(f, SignPower) else f.top.variables() | f.bottom.variables()
        if used - bound:
            raise UnboundedRegion(f"term uses unbound variables {sorted(used - bound)}")


def binomial_sum_value(spec: BinomialSumSpec, n: int) -> int:
    _validate(spec)
    env = {spec.outer: n}

    def rec(level: int) -> int:
        if level == len(spec.indices):
            prod = 1
            for f in spec.term:
                if isinstance(f, SignPower):
                    if f.exponent(env) % 2:
                        prod = -prod
                else:
                    b = binom0(f.top(env), f.bottom(env))
                    if b == 0:
                        return 0
                    prod *= b**f.power
            return prod
        idx = spec.indices[level]
        total = 0
        for k in range(idx.lower(env), idx.upper(env) + 1):
            env[idx.name] = k
            total += rec(level + 1)
        env.pop(idx.name, None)
        return total

    return rec(0)


def binomial_sum_series(spec: BinomialSumSpec, M: int) -> QSeries:
    _validate(spec)
    return QSeries((binomial_sum_value(spec, n) for n in range(M + 1)), M)


A = Affine.of


def apery_spec() -> BinomialSumSpec:
    """sum_k C(n,k)^2 C(n+k,k)."""
    return BinomialSumSpec(
        indices=(SumIndex("k", A(0), A(n=1)),),
        term=(Binom(A(n=1), A(k=1), 2), Binom(A(n=1, k=1), A(k=1))),
        name="apery",
    )


def grassmannian_g27_spec() -> BinomialSumSpec:
    """sum_{k,l} C(n,k)^2 C(n,l)^2 C(k+l,n) C(2n-k,n)."""
    return BinomialSumSpec(
        indices=(SumIndex("k", A(0), A(n=1)), SumIndex("l", A(0), A(n=1))),
        term=(Binom(A(n=1), A(k=1), 2), Binom(A(n=1), A(l=1), 2),
              Binom(A(k=1, l=1), A(n=1)), Binom(A(n=2, k=-1), A(n=1))),
        name="g27",
    )


def central_binomial_square_spec() -> BinomialSumSpec:
    """C(2n,n)^2 as a sum with no indices."""
    return BinomialSumSpec(indices=(), term=(Binom(A(n=2), A(n=1), 2),), name="c2n2")
