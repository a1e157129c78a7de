"""Text literals for field elements.

Grammar (whitespace-insensitive)::

    literal  := term (('+' | '-') term)*
    term     := rational ['*' 'z' '^' exponent]
              | ['-'] 'z' ['^' exponent]
    rational := ['-'] digits ['/' digits]
    exponent := ['-'] digits

``z`` stands for zeta_N.  Exponents are taken modulo N, so ``z^8`` with N=8
is 1.  :func:`format_literal` always emits one ``c*z^k`` term per nonzero
coefficient and ``0`` for zero; parse/format round-trips exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .cyclotomic import CycNum


class LiteralSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[-+*/^])|(?P<z>z))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            skipped = len(text[pos:]) - len(text[pos:].lstrip())
            raise LiteralSyntaxError("unexpected character", text, pos + skipped)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, N: int):
        self.text = text
        self.N = N
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, message: str):
        tok = self.peek()
        pos = tok[2] if tok else len(self.text)
        raise LiteralSyntaxError(message, self.text, pos)

    def take(self, kind: str, value: str | None = None):
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            self.error(f"expected {value or kind}")
        self.i += 1
        return tok

    def at(self, kind: str, value: str | None = None) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == kind and (value is None or tok[1] == value)

    def integer(self, signed: bool) -> int:
        neg = False
        if signed and self.at("op", "-"):
            self.i += 1
            neg = True
        v = int(self.take("int")[1])
        return -v if neg else v

    def exponent(self) -> int:
        self.take("op", "^")
        return self.integer(signed=True)

    def term(self) -> tuple[Fraction, int]:
        neg = False
        if self.at("op", "-"):
            self.i += 1
            neg = True
        if self.at("z"):
            self.i += 1
            k = self.exponent() if self.at("op", "^") else 1
            return Fraction(-1 if neg else 1), k
        num = int(self.take("int")[1])
        den = 1
        if self.at("op", "/"):
            self.i += 1
            den = int(self.take("int")[1])
            if den == 0:
                raise LiteralSyntaxError("zero denominator", self.text, self.tokens[self.i - 1][2])
        coeff = Fraction(-num if neg else num, den)
        k = 0
        if self.at("op", "*"):
            self.i += 1
            self.take("z")
            k = self.exponent() if self.at("op", "^") else 1
        return coeff, k

    def literal(self) -> CycNum:
        if not self.tokens:
            self.error("empty literal")
        acc = [Fraction(0)] * self.N
        c, k = self.term()
        acc[k % self.N] += c
        while self.peek() is not None:
            sign = self.take("op")
            if sign[1] not in "+-":
                self.i -= 1
                self.error("expected '+' or '-'")
            c, k = self.term()
            acc[k % self.N] += -c if sign[1] == "-" else c
        return CycNum.from_coeffs(self.N, acc)


def parse_literal(text: str, N: int) -> CycNum:
    """Parse ``text`` as an element of Q(zeta_N)."""
    return _Parser(text, N).literal()


def format_literal(a: CycNum) -> str:
    terms = [f"{c}*z^{j}" for j, c in enumerate(a.coeffs) if c]
    return " + ".join(terms) if terms else "0"
