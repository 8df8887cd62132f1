"""Tiny recursive-descent parser for the ``3*x1^2*x2 - x3`` text format.

The grammar is shared by scalars (``1/2``, ``z^3 - 1``, ``a^5``) and
polynomials; the caller supplies how constants and names evaluate.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

from .errors import InputError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        pos = m.end()
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", num))
        elif name is not None:
            out.append(("name", name))
        elif sym in "+-*/^()":
            out.append(("sym", sym))
        else:
            raise InputError(f"unexpected character {sym!r} in {text!r}")
    return out


class _Parser:
    def __init__(self, text, const, name):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.const = const
        self.name = name

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise InputError(f"cannot parse {self.text!r} near token {self.i}")
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise InputError("empty expression")
        val = self.expr()
        if self.i != len(self.toks):
            raise InputError(f"trailing input in {self.text!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek() in (("sym", "+"), ("sym", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            rhs = self.factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            neg = False
            if self.peek() == ("sym", "-"):
                self.take()
                neg = True
            e = int(self.take("num")[1])
            base = base ** (-e if neg else e)
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return self.const(Fraction(int(val)))
        if kind == "name":
            self.take()
            return self.name(val)
        if (kind, val) == ("sym", "("):
            self.take()
            inner = self.expr()
            self.take("sym", ")")
            return inner
        raise InputError(f"cannot parse {self.text!r}")


def parse_expression(text: str, const: Callable, name: Callable):
    """Evaluate ``text`` with ``const(Fraction)`` and ``name(str)`` hooks."""
    return _Parser(text, const, name).parse()
