"""Ordinals below epsilon-zero in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
exponents strictly decreasing, so ``w^2*3 + w*1 + 4`` is
``((2, 3), (1, 1), (0, 4))`` with the exponents themselves ordinals.
"""

from __future__ import annotations

import re
from functools import total_ordering
from typing import Iterable, Tuple, Union

from .errors import ParseError

__all__ = ["Ordinal", "compare", "add", "succ", "parse_ordinal", "ZERO", "ONE", "OMEGA"]


@total_ordering
class Ordinal:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[Tuple["Ordinal", int]] = ()):
        terms = tuple((as_ordinal(e), int(c)) for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise ValueError(f"coefficient must be positive, got {c}")
            if i and not (terms[i - 1][0] > e):
                raise ValueError("exponents must be strictly decreasing")
        self._terms = terms
        self._hash = None

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def omega_power(cls, exponent: "OrdinalLike" = 1, coefficient: int = 1) -> "Ordinal":
        if coefficient == 0:
            return ZERO
        return cls(((as_ordinal(exponent), coefficient),))

    @property
    def terms(self) -> Tuple[Tuple["Ordinal", int], ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_finite(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0].is_zero())

    def is_limit(self) -> bool:
        return bool(self._terms) and not self._terms[-1][0].is_zero()

    def leading_exponent(self) -> "Ordinal":
        if not self._terms:
            raise ValueError("zero has no leading exponent")
        return self._terms[0][0]

    def depth(self) -> int:
        return 1 + max((e.depth() for e, _ in self._terms), default=0)

    def __int__(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is not finite")
        return self._terms[0][1] if self._terms else 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Ordinal.from_int(other) if other >= 0 else None
            if other is None:
                return False
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self._terms == other._terms

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            if other < 0:
                return False
            other = Ordinal.from_int(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __add__(self, other: "OrdinalLike") -> "Ordinal":
        return add(self, as_ordinal(other))

    def __radd__(self, other: "OrdinalLike") -> "Ordinal":
        return add(as_ordinal(other), self)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e.is_zero():
                parts.append(str(c))
            elif e == ONE:
                parts.append(f"w*{c}")
            elif e.is_finite():
                parts.append(f"w^{int(e)}*{c}")
            else:
                parts.append(f"w^({e})*{c}")
        return " + ".join(parts)


OrdinalLike = Union[Ordinal, int]


def as_ordinal(x: OrdinalLike) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Ordinal.from_int(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def compare(a: OrdinalLike, b: OrdinalLike) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    a, b = as_ordinal(a), as_ordinal(b)
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def add(a: OrdinalLike, b: OrdinalLike) -> Ordinal:
    a, b = as_ordinal(a), as_ordinal(b)
    if b.is_zero():
        return a
    lead, lead_c = b.terms[0]
    kept = []
    for e, c in a.terms:
        cmp = compare(e, lead)
        if cmp > 0:
            kept.append((e, c))
        elif cmp == 0:
            lead_c += c
            break
        else:
            break
    return Ordinal(kept + [(lead, lead_c)] + list(b.terms[1:]))


def succ(a: Ordinal) -> Ordinal:
    return add(a, ONE)


_TOKEN = re.compile(r"\s*(?:(\d+)|(w)|([\^*+(){}]))")


def parse_ordinal(text: str) -> Ordinal:
    """Parse ``w^2*3 + w*1 + 4`` style text; terms out of order are absorbed."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("nat", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("w", None, start))
        else:
            tokens.append((m.group(3), None, start))
        pos = m.end()
    parser = _OrdinalParser(tokens, text)
    result = parser.ordinal()
    if parser.i != len(tokens):
        raise ParseError("trailing input", tokens[parser.i][2], text)
    return result


class _OrdinalParser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.i = 0

    def _peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def _take(self, kind):
        if self._peek() != kind:
            where = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
            raise ParseError(f"expected {kind!r}", where, self.text)
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def ordinal(self) -> Ordinal:
        total = self.term()
        while self._peek() == "+":
            self.i += 1
            total = add(total, self.term())
        return total

    def term(self) -> Ordinal:
        kind = self._peek()
        if kind == "nat":
            return Ordinal.from_int(self._take("nat")[1])
        self._take("w")
        exponent = ONE
        if self._peek() == "^":
            self.i += 1
            exponent = self.exponent()
        coefficient = 1
        if self._peek() == "*":
            self.i += 1
            coefficient = self._take("nat")[1]
        return Ordinal.omega_power(exponent, coefficient)

    def exponent(self) -> Ordinal:
        kind = self._peek()
        if kind == "nat":
            return Ordinal.from_int(self._take("nat")[1])
        if kind == "w":
            self.i += 1
            return OMEGA
        close = {"(": ")", "{": "}"}.get(kind)
        if close is None:
            where = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
            raise ParseError("expected exponent", where, self.text)
        self.i += 1
        inner = self.ordinal()
        self._take(close)
        return inner
