"""Parser for the textual distribution grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := number | number'i' | 'i' | 'pi' | atom | '(' expr ')'
    atom   := 'H' | 'sgn' | 'one' | 'ramp' | 'delta' | 'h' | 'pv:'<n>
            | 'd(' expr ')' | 'F(' expr ')'

Example: ``-i*pv:1 + pi*delta``.
"""
from __future__ import annotations

import math
import re

from .dist import DELTA, HFUN, ONE, RAMP, SGN, Combo, Distribution, H, derivative, fourier
from .errors import ParseError
from .pv import pv_distribution

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?i?)"
    r"|(?P<pv>pv:\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<sym>[()*+\-])"
    r")"
)

_ATOMS = {"H": H, "sgn": SGN, "one": ONE, "ramp": RAMP, "delta": DELTA, "h": HFUN}
_CONSTANTS = {"i": 1j, "pi": math.pi}


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(m.lastgroup))
        pos = m.end()
    return out


class _Parser:
    # a parsed value is a list of (coefficient, distribution-or-None) terms

    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ParseError(f"expected {expect or 'token'} in {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def expr(self):
        terms = []
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        terms += self._signed(self.term(), sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            terms += self._signed(self.term(), sign)
        return terms

    @staticmethod
    def _signed(terms, sign):
        return [(sign * c, d) for c, d in terms]

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = self._product(value, self.factor())
        return value

    def _product(self, a, b):
        a_scalar = all(d is None for _, d in a)
        b_scalar = all(d is None for _, d in b)
        if not (a_scalar or b_scalar):
            raise ParseError("product of two distributions is not defined")
        if a_scalar and b_scalar:
            return [(sum(c for c, _ in a) * sum(c for c, _ in b), None)]
        s, dist = (a, b) if a_scalar else (b, a)
        k = sum(c for c, _ in s)
        return [(k * c, d) for c, d in dist]

    def factor(self):
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if tok in ("d", "F") and self.peek() == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            d = _to_distribution(inner, self.text)
            return [(1, derivative(d) if tok == "d" else fourier(d))]
        if tok.startswith("pv:"):
            return [(1, pv_distribution(int(tok[3:])))]
        if tok in _ATOMS:
            return [(1, _ATOMS[tok])]
        if tok in _CONSTANTS:
            return [(_CONSTANTS[tok], None)]
        if tok[0].isdigit() or tok[0] == ".":
            if tok.endswith("i"):
                return [(complex(0, float(tok[:-1])), None)]
            return [(float(tok), None)]
        raise ParseError(f"unknown symbol {tok!r} in {self.text!r}")


def _to_distribution(terms, text) -> Distribution:
    if any(d is None for _, d in terms):
        raise ParseError(f"scalar term where a distribution is expected in {text!r}")
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return Combo(tuple(terms))


def parse_distribution(text: str) -> Distribution:
    p = _Parser(text)
    if not p.toks:
        raise ParseError("empty distribution expression")
    terms = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input {p.peek()!r} in {text!r}")
    return _to_distribution(terms, text)
