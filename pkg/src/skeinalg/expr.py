"""Expression syntax shared by the CLI and the presentation catalog.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (['*'] factor)*          # juxtaposition multiplies
    factor := ('-' | '+') factor | power
    power  := atom ['^' ['-'] INT]
    atom   := INT | NAME | '(' expr ')'

``A`` is the ring variable, ``del`` is A^2 - A^-2, every other name must be a
generator of the target table (or an entry of ``env``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .laurent import DELTA, Laurent, A, format_laurent, is_unit, unit_inverse
from .ncalg import Element, GeneratorTable

__all__ = [
    "ParseError",
    "parse_expr",
    "parse_element",
    "evaluate",
    "format_element",
    "parse_link",
]


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}" + (f": {text!r}" if text else ""))


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Add:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Sub:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Mul:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


Node = Union[Num, Name, Neg, Add, Sub, Mul, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(("num", int(num), start))
        elif name is not None:
            toks.append(("name", name, start))
        else:
            if op not in "+-*^()":
                raise ParseError(f"unexpected character {op!r}", start, text)
            toks.append(("op", op, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}", t[2], self.text)

    def parse(self) -> Node:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0, self.text)
        node = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected token", t[2], self.text)
        return node

    def expr(self) -> Node:
        node = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                rhs = self.term()
                node = Add(node, rhs) if t[1] == "+" else Sub(node, rhs)
            else:
                return node

    def _starts_factor(self, t) -> bool:
        return t[0] in ("num", "name") or (t[0] == "op" and t[1] == "(")

    def term(self) -> Node:
        node = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                node = Mul(node, self.factor())
            elif self._starts_factor(t):
                node = Mul(node, self.factor())
            else:
                return node

    def factor(self) -> Node:
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            arg = self.factor()
            return Neg(arg) if t[1] == "-" else arg
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            sign = 1
            t2 = self.peek()
            if t2[0] == "op" and t2[1] == "-":
                self.take()
                sign = -1
            t3 = self.take()
            if t3[0] != "num":
                raise ParseError("expected integer exponent", t3[2], self.text)
            return Pow(base, sign * t3[1])
        return base

    def atom(self) -> Node:
        t = self.take()
        if t[0] == "num":
            return Num(t[1])
        if t[0] == "name":
            return Name(t[1], t[2])
        if t[0] == "op" and t[1] == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError("expected a number, name or '('", t[2], self.text)


def parse_expr(text: str) -> Node:
    return _Parser(text).parse()


def evaluate(node: Node, table: GeneratorTable, env: Optional[Mapping[str, Element]] = None,
             text: str = "") -> Element:
    env = env or {}

    def ev(n) -> Element:
        if isinstance(n, Num):
            return Element.scalar(table, n.value)
        if isinstance(n, Name):
            if n.name in env:
                return env[n.name]
            if n.name == "A":
                return Element.scalar(table, A)
            if n.name == "del":
                return Element.scalar(table, DELTA)
            if n.name in table.names:
                return Element.gen(table, n.name)
            raise ParseError(f"unknown name {n.name!r}", n.pos, text)
        if isinstance(n, Neg):
            return -ev(n.arg)
        if isinstance(n, Add):
            return ev(n.left) + ev(n.right)
        if isinstance(n, Sub):
            return ev(n.left) - ev(n.right)
        if isinstance(n, Mul):
            return ev(n.left) * ev(n.right)
        if isinstance(n, Pow):
            b = ev(n.base)
            if n.exp >= 0:
                return b ** n.exp
            if not b.is_scalar() or not is_unit(b.coeff(())):
                raise ParseError("negative powers are only allowed for units", _pos(n), text)
            return Element.scalar(table, unit_inverse(b.coeff(())) ** (-n.exp))
        raise TypeError(n)

    return ev(node)


def _pos(n) -> int:
    while not isinstance(n, (Num, Name)):
        n = getattr(n, "base", None) or getattr(n, "arg", None) or getattr(n, "left")
    return getattr(n, "pos", 0)


def parse_element(text: str, table: GeneratorTable, env: Optional[Mapping[str, Element]] = None) -> Element:
    return evaluate(parse_expr(text), table, env, text)


def _default_key(w):
    return (len(w), w)


def _word_text(names) -> str:
    out = []
    i = 0
    while i < len(names):
        j = i
        while j < len(names) and names[j] == names[i]:
            j += 1
        out.append(names[i] if j - i == 1 else f"{names[i]}^{j - i}")
        i = j
    return " ".join(out)


def format_element(e: Element, key=None) -> str:
    """Canonical text: terms by descending word order, e.g. ``A^2 x1 x2 - (A^3 - A^-1) x3``."""
    if e.is_zero():
        return "0"
    key = key or _default_key
    pieces = []  # (negative?, body)
    for w in sorted(e.words(), key=key, reverse=True):
        c = e.coeff(w)
        word = _word_text(e.table.word_names(w))
        if not w:
            for k in sorted(c.terms, reverse=True):
                v = c.coeff(k)
                body = format_laurent(Laurent({k: abs(v)}))
                pieces.append((v < 0, body))
            continue
        lead_e, lead_c = c.leading()
        neg = lead_c < 0
        mag = -c if neg else c
        if mag.is_monomial():
            (k, v), = mag.items()
            if k == 0 and v == 1:
                body = word
            else:
                body = f"{format_laurent(mag)} {word}"
        else:
            body = f"({format_laurent(mag)}) {word}"
        pieces.append((neg, body))
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out)


_LINK = re.compile(r"^\s*\(\s*(-?\d+)\s*((?:,\s*-?\d+\s*)+)\)\s*$")


def parse_link(text: str, size: int) -> tuple:
    """Parse ``(p,q)`` or ``(a,b,c)``."""
    m = _LINK.match(text)
    if not m:
        raise ParseError("expected a link literal like (p,q)", 0, text)
    parts = [int(m.group(1))] + [int(x) for x in re.findall(r"-?\d+", m.group(2))]
    if len(parts) != size:
        raise ParseError(f"expected {size} coordinates, got {len(parts)}", 0, text)
    return tuple(parts)
