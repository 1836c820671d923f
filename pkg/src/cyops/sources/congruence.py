"""Memoised integer sequences and Dwork-type congruence checks."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..errors import NonIntegralSequence


class IntegerSequence:
    """Sequence a_n given by a generator function, memoised append-only.

    Reads of already computed values take no lock; extension is exclusive.
    """

    def __init__(self, generator: Callable[[int], object], name: str = ""):
        self._gen = generator
        self._memo: list = []
        self._lock = threading.Lock()
        self.name = name

    @classmethod
    def from_list(cls, values, name: str = "") -> "IntegerSequence":
        vals = list(values)

        def gen(n: int):
            if n >= len(vals):
                raise IndexError(f"sequence only has {len(vals)} stored terms")
            return vals[n]

        return cls(gen, name)

    def __getitem__(self, n: int):
        memo = self._memo
        if n < len(memo):
            return memo[n]
        with self._lock:
            while len(self._memo) <= n:
                self._memo.append(self._gen(len(self._memo)))
            return self._memo[n]

    def values(self, M: int) -> list:
        self[M]
        return self._memo[: M + 1]

    def __len__(self) -> int:
        return len(self._memo)


def base_digits(n: int, p: int) -> list[int]:
    """Base-p digits, least significant first; 0 has the single digit 0."""
    if n == 0:
        return [0]
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out


@dataclass(frozen=True)
class DworkReport:
    ok: bool
    p: int
    checked: int
    first_failure: tuple | None = None  # (n, a_n mod p, product mod p)


def _as_int(v, n: int) -> int:
    if isinstance(v, int):
        return v
    v = Fraction(v)
    if v.denominator != 1:
        raise NonIntegralSequence(f"a_{n} = {v} is not an integer")
    return v.numerator


def dwork_check(a: IntegerSequence, p: int, digits: int = 3, bound: int | None = None) -> DworkReport:
    """Check a_(n0 + n1 p + ... + nk p^k) = a_n0 a_n1 ... a_nk (mod p).

    Digit expansions are minimal (no zero padding), k is at most ``digits``
    and n runs up to ``bound``, which defaults to p^digits.
    """
    top = p**digits if bound is None else min(bound, p ** (digits + 1) - 1)
    for n in range(top + 1):
        lhs = _as_int(a[n], n) % p
        rhs = 1
        for d in base_digits(n, p):
            rhs = rhs * _as_int(a[d], d) % p
        if lhs != rhs:
            return DworkReport(False, p, n + 1, (n, lhs, rhs))
    return DworkReport(True, p, top + 1)
