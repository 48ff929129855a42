"""Tiny expression parser shared by the element, polynomial and spec-file grammars.

Expressions are sums of products of factors, a factor being a rational
literal (``3``, ``3/4``), a name, or a parenthesised expression, optionally
raised to a non-negative integer power.  Evaluation is delegated to two
callbacks so the same grammar serves WeilElement, Poly and APoly values.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

__all__ = ["ParseError", "evaluate", "format_rational", "parse_rational"]


class ParseError(ValueError):
    """Raised for malformed text input."""


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if op not in "+-*^()/":
                raise ParseError(f"unexpected character {op!r} at offset {m.start(3)} in {text!r}")
            tokens.append(("op", op))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, text, const, lookup):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.const = const
        self.lookup = lookup

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind} but found {tok[1]!r} in {self.text!r}")
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input {self.peek()[1]!r} in {self.text!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            _, exp = self.expect("num")
            base = base ** exp
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            if self.peek() == ("op", "/"):
                self.take()
                _, den = self.expect("num")
                if den == 0:
                    raise ParseError(f"zero denominator in {self.text!r}")
                return self.const(Fraction(val, den))
            return self.const(Fraction(val))
        if kind == "name":
            return self.lookup(val)
        if (kind, val) == ("op", "("):
            value = self.expr()
            self.expect("op", ")")
            return value
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def evaluate(text: str, const: Callable, lookup: Callable):
    """Parse ``text`` and fold it with ``const(Fraction)`` and ``lookup(name)``.

    ``lookup`` should raise ParseError for unknown names.
    """
    return _Parser(text, const, lookup).parse()


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions and "p/q" strings (the JSON wire format)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
