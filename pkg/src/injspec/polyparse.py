"""Recursive-descent parser for the polynomial surface syntax.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] atom ['^' INT]
    atom   := INT ['/' INT] | IDENT | '(' expr ')'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import ParseError
from .polycomm import MultiPoly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")

Token = Tuple[str, str, int]


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("ident", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, ring: Optional[PolyRing] = None) -> MultiPoly:
    """Parse ``text``; without a ring, variables are taken in order of appearance."""
    tokens = tokenize(text)
    if ring is None:
        names: List[str] = []
        for kind, value, _ in tokens:
            if kind == "ident" and value not in names:
                names.append(value)
        ring = PolyRing(tuple(names))
    if not tokens:
        raise ParseError("empty polynomial", 0, text)
    parser = _Parser(tokens, text, ring)
    result = parser.expr()
    if parser.i < len(tokens):
        raise ParseError(f"unexpected {tokens[parser.i][1]!r}", tokens[parser.i][2], text)
    return result


class _Parser:
    def __init__(self, tokens: List[Token], text: str, ring: PolyRing):
        self.tokens = tokens
        self.text = text
        self.ring = ring
        self.i = 0

    def _peek(self) -> Optional[str]:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _pos(self) -> int:
        return self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)

    def _expect(self, kind: str) -> Token:
        if self._peek() != kind:
            raise ParseError(f"expected {kind!r}", self._pos(), self.text)
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> MultiPoly:
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._peek() == "-" else 1
            self.i += 1
        total = self.term() * sign
        while self._peek() in ("+", "-"):
            op = self._peek()
            self.i += 1
            t = self.term()
            total = total + t if op == "+" else total - t
        return total

    def term(self) -> MultiPoly:
        result = self.factor()
        while self._peek() == "*":
            self.i += 1
            result = result * self.factor()
        return result

    def factor(self) -> MultiPoly:
        if self._peek() == "-":
            self.i += 1
            return -self.factor()
        base = self.atom()
        if self._peek() == "^":
            self.i += 1
            if self._peek() != "int":
                raise ParseError("exponent must be a non-negative integer", self._pos(), self.text)
            base = base ** int(self._expect("int")[1])
        return base

    def atom(self) -> MultiPoly:
        kind = self._peek()
        if kind == "int":
            num = int(self._expect("int")[1])
            if self._peek() == "/":
                self.i += 1
                if self._peek() != "int":
                    raise ParseError("denominator must be an integer literal", self._pos(), self.text)
                den = int(self._expect("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", self.tokens[self.i - 1][2], self.text)
                return self.ring.constant(Fraction(num, den))
            return self.ring.constant(num)
        if kind == "ident":
            name, pos = self.tokens[self.i][1], self.tokens[self.i][2]
            self.i += 1
            if name not in self.ring.variables:
                raise ParseError(f"unknown variable {name!r}", pos, self.text)
            return self.ring.var(name)
        if kind == "(":
            self.i += 1
            inner = self.expr()
            self._expect(")")
            return inner
        raise ParseError("expected a number, variable or '('", self._pos(), self.text)
