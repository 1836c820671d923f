"""Recursive-descent parser for polynomial expressions.

Grammar (``^`` binds tightest, unary minus allowed):

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" exponent)?
    atom   := NUMBER | VARIABLE | "(" expr ")"

NUMBER is an integer or a rational ``p/q`` written without spaces.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..seriesalg.multivariate import LaurentPoly
from ..seriesalg.poly import RatPoly

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z])|(?P<op>[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "var", "op", "end"
    text: str
    column: int  # 1-based


def tokenize(text: str, line: int | None = None, offset: int = 0) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col + offset,
                             {"number", "variable", "+", "-", "*", "^", "(", ")"})
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind) + 1 + offset))
        pos = m.end()
    tokens.append(Token("end", "", len(text.rstrip()) + 1 + offset))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...], allow_negative: bool,
                 line: int | None, offset: int):
        self.tokens = tokenize(text, line, offset)
        self.i = 0
        self.variables = variables
        self.allow_negative = allow_negative
        self.line = line
        self.dim = len(variables)

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, tok: Token, expected) -> ParseError:
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"unexpected {what}", self.line, tok.column, expected)

    def parse(self) -> LaurentPoly:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise self.fail(tok, {"+", "-", "*", "^", "end of input"})
        return value

    def expr(self) -> LaurentPoly:
        value = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> LaurentPoly:
        value = self.unary()
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self) -> LaurentPoly:
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> LaurentPoly:
        base = self.atom()
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            sign = 1
            tok = self.peek()
            if self.allow_negative and tok.kind == "op" and tok.text == "-":
                self.take()
                sign = -1
                tok = self.peek()
            if tok.kind != "num" or "/" in tok.text:
                expected = {"integer exponent"} | ({"-"} if self.allow_negative and sign == 1 else set())
                raise self.fail(tok, expected)
            self.take()
            return base ** (sign * int(tok.text))
        return base

    def atom(self) -> LaurentPoly:
        tok = self.take()
        if tok.kind == "num":
            return LaurentPoly.const(self.dim, Fraction(tok.text))
        if tok.kind == "var":
            if tok.text not in self.variables:
                raise ParseError(f"unknown variable {tok.text!r}", self.line, tok.column,
                                 set(self.variables))
            return LaurentPoly.var(self.dim, self.variables.index(tok.text))
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.text == ")"):
                self.i -= 1
                raise self.fail(close, {")", "+", "-", "*", "^"})
            return value
        self.i -= 1
        raise self.fail(tok, {"number", "variable", "(", "-"})


def parse_laurent(text: str, variables: tuple[str, ...], line: int | None = None,
                  offset: int = 0) -> LaurentPoly:
    """Parse a Laurent polynomial; negative exponents are allowed on any factor."""
    return _Parser(text, tuple(variables), True, line, offset).parse()


def variables_in(*texts: str) -> tuple[str, ...]:
    """Sorted single-letter variable names occurring in the expressions."""
    names = set()
    for t in texts:
        names.update(tok.text for tok in tokenize(t) if tok.kind == "var")
    return tuple(sorted(names))


def parse_poly(text: str, var: str = "T", line: int | None = None, offset: int = 0) -> RatPoly:
    """Parse a univariate polynomial in ``var``."""
    lp = _Parser(text, (var,), False, line, offset).parse()
    coeffs: dict[int, Fraction] = {}
    for (e,), c in lp.terms.items():
        coeffs[e] = c
    if not coeffs:
        return RatPoly([])
    return RatPoly([coeffs.get(k, Fraction(0)) for k in range(max(coeffs) + 1)])


def format_poly(p: RatPoly, var: str = "T") -> str:
    """Canonical expanded form: descending powers, ``c*T^k`` terms, rationals as p/q."""
    parts = []
    for k in range(p.degree, -1, -1):
        c = Fraction(p.coeffs[k])
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"
