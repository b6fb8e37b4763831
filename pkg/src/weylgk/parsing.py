"""Text syntax for elements.

    expr    := [sign] term (sign term)*
    term    := product ('@' product)*          '@' separates tensor slots
    product := factor ('*' factor)*
    factor  := rational | generator ['^' ['-'] int]

Generators are ``e[i,j]``, ``e[i]``, ``einv[i]``, ``a[i,j]``, ``x[i]``,
``xinv[i]``, ``d[i]`` and, for ``s_1``, ``d0``/``d1``.  A negative exponent
is allowed only on a generator whose algebra has an inverse for it.  The
printer in :mod:`weylgk.algebra` emits exactly this syntax, so
``parse_element(str(u), A) == u`` for every element ``u`` of ``A``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra, Element


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.message = message
        if pos is not None and text is not None:
            message = f"{message} at position {pos}\n  {text}\n  {' ' * pos}^"
        elif pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<gen>[A-Za-z_][A-Za-z_0-9]*(?:\[\s*\d+\s*(?:,\s*\d+\s*)?\])?)
  | (?P<op>[-+*^@()])
""", re.VERBOSE)


@dataclass
class Factor:
    label: str
    exponent: int
    pos: int


@dataclass
class Term:
    coeff: Fraction
    slots: list = field(default_factory=list)  # list[list[Factor]]


@dataclass
class Expression:
    terms: list
    text: str = ""


def tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            value = m.group()
            if kind == "gen":
                value = re.sub(r"\s+", "", value)
            out.append((kind, value, pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, pos=None):
        return ParseError(msg, self.peek()[2] if pos is None else pos, self.text)

    def expect_op(self, op):
        kind, val, pos = self.peek()
        if kind != "op" or val != op:
            raise self.error(f"expected {op!r}")
        self.take()

    def expression(self) -> Expression:
        terms = []
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        terms.append(self.term(sign))
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                terms.append(self.term(-1 if val == "-" else 1))
            elif kind == "end":
                break
            else:
                raise self.error(f"unexpected {val!r}")
        return Expression(terms, self.text)

    def term(self, sign) -> Term:
        coeff = Fraction(sign)
        slots = []
        while True:
            c, factors = self.product()
            coeff *= c
            slots.append(factors)
            kind, val, _ = self.peek()
            if kind == "op" and val == "@":
                self.take()
                continue
            return Term(coeff, slots)

    def product(self):
        coeff = Fraction(1)
        factors = []
        while True:
            kind, val, pos = self.peek()
            if kind == "num":
                self.take()
                try:
                    coeff *= Fraction(val)
                except ZeroDivisionError:
                    raise ParseError("malformed rational (zero denominator)", pos, self.text) from None
            elif kind == "gen":
                self.take()
                factors.append(Factor(val, self.exponent(), pos))
            else:
                raise self.error("expected a number or generator")
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                continue
            return coeff, factors

    def exponent(self) -> int:
        kind, val, _ = self.peek()
        if not (kind == "op" and val == "^"):
            return 1
        self.take()
        paren = False
        if self.peek()[:2] == ("op", "("):
            self.take()
            paren = True
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        kind, val, pos = self.peek()
        if kind != "num" or "/" in val:
            raise self.error("exponent must be an integer")
        self.take()
        if paren:
            self.expect_op(")")
        return sign * int(val)


def parse(text: str) -> Expression:
    """Parse ``text`` into an :class:`Expression` without choosing an algebra."""
    if not text.strip():
        raise ParseError("empty expression", 0, text)
    return _Parser(text).expression()


def _eval_product(factors, A: Algebra, text: str) -> Element:
    out = A.one()
    for f in factors:
        label, k = f.label, f.exponent
        try:
            if k < 0:
                inv = A.inverse_label(label)
                if inv is None:
                    raise ParseError(f"negative exponent on non-invertible generator {label}", f.pos, text)
                label, k = inv, -k
            g = A.gen(label)
        except KeyError:
            raise ParseError(f"unknown generator {f.label!r} for {A}", f.pos, text) from None
        out = out * g ** k
    return out


def evaluate(expr: Expression, A: Algebra) -> Element:
    """Build the element of ``A`` described by ``expr``."""
    from .tensor import TensorAlgebra

    total = A.zero()
    for t in expr.terms:
        if len(t.slots) == 1:
            val = _eval_product(t.slots[0], A, expr.text)
        else:
            if not isinstance(A, TensorAlgebra) or len(A.factors) != len(t.slots):
                pos = t.slots[0][0].pos if t.slots[0] else 0
                raise ParseError(f"{len(t.slots)} tensor slots do not fit {A}", pos, expr.text)
            val = A.pure(*(_eval_product(fs, F, expr.text) for fs, F in zip(t.slots, A.factors)))
        total = total + val * t.coeff
    return total


def parse_element(text: str, A: Algebra) -> Element:
    return evaluate(parse(text), A)
