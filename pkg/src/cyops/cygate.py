"""Calabi-Yau operator gate: runs every check and aggregates a verdict."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from sympy import factorint

from .errors import CyopsError
from .frobenius import holomorphic_solution, mum_check
from .mirror import InstantonTable, instanton_numbers, mirror_pipeline
from .opcore.diffop import theta_to_d
from .opcore.selfdual import alpha_dual_function, exponent_parity, q_quantity
from .opcore.symbol import fuchs_check, riemann_symbol
from .opcore.theta import ThetaOperator
from .seriesalg.integrality import IntegralityReport, n_integrality_scan, p_valuation
from .seriesalg.qseries import QSeries

DEFAULT_M = 50
DEFAULT_D = 8


class Grade(Enum):
    CALABI_YAU = "CalabiYau"
    N_INTEGRAL = "CalabiYau-N-integral"
    FAILS = "Fails"


@dataclass(frozen=True)
class Verdict:
    grade: Grade
    failures: tuple[str, ...] = ()

    def __str__(self):
        if self.grade is Grade.FAILS:
            return f"Fails({', '.join(self.failures)})"
        return self.grade.value


@dataclass(frozen=True)
class SelfDuality:
    q_zero: bool | None
    q_text: str = ""
    alpha_rational: bool | None = None
    alpha_text: str = ""
    parity_even: bool | None = None


@dataclass(frozen=True)
class InstantonCheck:
    integral: bool
    nu: Fraction = Fraction(1)
    non_integral: tuple[tuple[int, int], ...] = ()  # (d, denominator) at nu = 1
    table: InstantonTable | None = None

    @property
    def first_non_integral(self) -> tuple[int, int] | None:
        return self.non_integral[0] if self.non_integral else None


@dataclass(frozen=True)
class GateReport:
    """All gate answers hold "to order M": finite evidence, never a proof."""

    M: int
    D: int
    n0: Fraction
    degrees: tuple[int, int]
    fuchsian: bool
    fuchs_witness: tuple = ()
    self_dual: SelfDuality = SelfDuality(None)
    mum_at_0: bool = False
    y0: IntegralityReport | None = None
    q: IntegralityReport | None = None
    K: IntegralityReport | None = None
    instantons: InstantonCheck | None = None
    symbol_text: str | None = None
    errors: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> Verdict:
        failures = []
        if not self.fuchsian:
            failures.append("fuchsian")
        if not self.self_dual.q_zero:
            failures.append("self_dual")
        if not self.mum_at_0:
            failures.append("mum_at_0")
        for name, rep in (("y0_integrality", self.y0), ("q_integrality", self.q),
                          ("K_integrality", self.K)):
            if rep is None or not rep.integral:
                failures.append(name)
        if self.instantons is None or not self.instantons.integral:
            failures.append("instanton_integrality")
        if failures:
            return Verdict(Grade.FAILS, tuple(failures))
        # the instanton stage is judged at the normalised nu, so only the scans grade
        strict = all(r.strict for r in (self.y0, self.q, self.K))
        return Verdict(Grade.CALABI_YAU if strict else Grade.N_INTEGRAL)

    def as_dict(self) -> dict:
        def scan(r: IntegralityReport | None):
            if r is None:
                return None
            return {"integral": r.integral, "c": r.c, "N": r.N, "witness": r.witness,
                    "unbounded": r.unbounded, "reason": r.reason}

        inst = None
        if self.instantons is not None:
            i = self.instantons
            inst = {"integral": i.integral, "nu": str(i.nu),
                    "non_integral": [list(x) for x in i.non_integral],
                    "values": [str(v) for v in i.table.values()] if i.table else []}
        sd = self.self_dual
        return {
            "order": self.degrees[0], "degree": self.degrees[1],
            "M": self.M, "D": self.D, "n0": str(self.n0),
            "fuchsian": self.fuchsian,
            "fuchs_witness": [[str(p), i] for p, i in self.fuchs_witness],
            "self_dual": {"Q_zero": sd.q_zero, "Q": sd.q_text, "alpha_rational": sd.alpha_rational,
                          "alpha": sd.alpha_text, "parity_even": sd.parity_even},
            "mum_at_0": self.mum_at_0,
            "y0_integrality": scan(self.y0), "q_integrality": scan(self.q),
            "K_integrality": scan(self.K), "instanton_integrality": inst,
            "riemann_symbol": self.symbol_text,
            "errors": [list(e) for e in self.errors],
            "verdict": str(self.verdict),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = [f"operator order {self.degrees[0]}, degree {self.degrees[1]} (checked to order {self.M})"]
        lines.append(f"fuchsian: {self.fuchsian}")
        sd = self.self_dual
        lines.append(f"self-dual (Q = 0): {sd.q_zero}; alpha rational: {sd.alpha_rational}; "
                     f"exponent parity even: {sd.parity_even}")
        lines.append(f"MUM at 0: {self.mum_at_0}")
        for name, r in (("y0", self.y0), ("q", self.q), ("K", self.K)):
            lines.append(f"{name} integrality: " + ("n/a" if r is None else
                                                    f"{r.integral} (c={r.c}, N={r.N})"))
        i = self.instantons
        if i is None:
            lines.append("instanton integrality: n/a")
        else:
            first = i.first_non_integral
            extra = f", first non-integral d={first[0]} denominator {first[1]}" if first else ""
            lines.append(f"instanton integrality: {i.integral} (nu={i.nu}{extra})")
        for stage, msg in self.errors:
            lines.append(f"error in {stage}: {msg}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _extra_divisibility(a: QSeries) -> int:
    """G = prod p^(min_n floor(v_p(a_n)/n)) over primes dividing every a_n, n >= 1."""
    nz = [(n, int(x)) for n, x in enumerate(a.coeffs) if n and x]
    if not nz:
        return 1
    common = None
    for _, x in nz:
        ps = set(factorint(abs(x))) if abs(x) > 1 else set()
        common = ps if common is None else common & ps
        if not common:
            return 1
    g = 1
    for p in sorted(common):
        g *= p ** min(p_valuation(x, p) // n for n, x in nz)
    return g


def _normalisation(y0: QSeries, rep: IntegralityReport) -> Fraction:
    """nu = N / G where c y0(N t) is divisible coefficientwise by G^n."""
    scaled = y0.scale_var(rep.N) * rep.c
    if not scaled.is_integral():
        return Fraction(rep.N)
    return Fraction(rep.N, _extra_divisibility(scaled))


def _instanton_check(K: QSeries, D: int, n0, nu: Fraction) -> InstantonCheck:
    table = instanton_numbers(K, D, n0)
    bad = tuple((d, v.denominator) for d, v in table.entries if v.denominator != 1)
    if not bad:
        return InstantonCheck(True, Fraction(1), (), table)
    if nu != 1:
        alt = instanton_numbers(K.scale_var(nu), D, n0)
        if alt.is_integral():
            return InstantonCheck(True, nu, bad, alt)
    return InstantonCheck(False, Fraction(1), bad, table)


def run_gate(op: ThetaOperator, M: int = DEFAULT_M, D: int = DEFAULT_D, n0=1) -> GateReport:
    """Run all stages; stage errors are recorded in the report instead of raised."""
    errors: list[tuple[str, str]] = []
    fields: dict = {}

    def stage(name, fn):
        try:
            return fn()
        except CyopsError as exc:
            errors.append((name, f"{type(exc).__name__}: {exc}"))
            return None

    dop = theta_to_d(op)
    rep = stage("fuchs_check", lambda: fuchs_check(dop))
    fields["fuchsian"] = bool(rep and rep.fuchsian)
    fields["fuchs_witness"] = tuple(rep.failures) if rep else ()

    sym = stage("riemann_symbol", lambda: riemann_symbol(op)) if fields["fuchsian"] else None
    fields["symbol_text"] = sym.to_text() if sym else None

    Q = stage("q_quantity", lambda: q_quantity(dop))
    alpha = stage("alpha_dual_function", lambda: alpha_dual_function(dop)) if Q is not None and Q.is_zero() else None
    parity = exponent_parity(sym).all_even if sym else None
    fields["self_dual"] = SelfDuality(
        None if Q is None else Q.is_zero(),
        "" if Q is None else str(Q),
        None if alpha is None else alpha.rational,
        "" if alpha is None else alpha.to_string(),
        parity,
    )

    fields["mum_at_0"] = mum_check(op)
    if fields["mum_at_0"]:
        y0 = stage("holomorphic_solution", lambda: holomorphic_solution(op, M))
        if y0 is not None:
            fields["y0"] = stage("y0_scan", lambda: n_integrality_scan(y0))
        piped = stage("mirror", lambda: mirror_pipeline(op, M, n0))
        if piped is not None:
            _, md = piped
            fields["q"] = stage("q_scan", lambda: n_integrality_scan(md.q_of_t))
            if md.K is not None:
                fields["K"] = stage("K_scan", lambda: n_integrality_scan(md.K))
                nu = _normalisation(y0, fields["y0"]) if y0 is not None and fields.get("y0") and fields["y0"].integral else Fraction(1)
                fields["instantons"] = stage("instantons", lambda: _instanton_check(md.K, min(D, md.K.trunc), n0, nu))
            else:
                errors.append(("yukawa_coupling", f"NotOrderFour: order {op.order}"))
    return GateReport(M=M, D=D, n0=Fraction(n0), degrees=(op.order, op.degree),
                      errors=tuple(errors), **fields)
