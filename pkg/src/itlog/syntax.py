"""Text syntax for elements and r-forms.

Grammar (whitespace is ignored)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | rational | 'r' ['^' NUM]
              | 'l' '(' ['-'] NUM ')' ['^' exponent] | '(' expr ')'
    exponent := ['-'] rational | 'r' | '(' expr ')'
    rational := NUM ['/' NUM]

``r`` is only meaningful in r-forms, where it may appear in coefficients
and in parenthesised exponents, e.g. ``(r - 1)*l(1)^(r + 1)``.  Error
offsets are byte offsets into the UTF-8 encoded input.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import Element
from .errors import ParseError
from .rforms import RForm, RPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))", re.S)


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'end' or the punctuation character itself
    text: str
    pos: int


@dataclass(frozen=True)
class Node:
    kind: str  # num, level, r, neg, add, sub, mul
    pos: int
    value: object = None
    children: tuple["Node", ...] = ()


def _tokenize(text: str) -> list[Token]:
    tokens = []
    i = 0
    while True:
        m = _TOKEN.match(text, i)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(Token("num", m.group(1), m.start(1)))
        else:
            ch = m.group(2)
            if ch not in "lr()^*+-/":
                raise ParseError(f"unexpected character {ch!r}", len(text[: m.start(2)].encode()))
            tokens.append(Token(ch, ch, m.start(2)))
        i = m.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        pos = self.peek().pos if pos is None else pos
        return ParseError(message, len(self.text[:pos].encode()))

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            found = "end of input" if tok.kind == "end" else repr(tok.text)
            raise self.error(f"expected {kind!r}, found {found}")
        self.i += 1
        return tok

    def accept(self, kind: str) -> Optional[Token]:
        if self.peek().kind == kind:
            self.i += 1
            return self.tokens[self.i - 1]
        return None

    def parse(self) -> Node:
        node = self.expr()
        if self.peek().kind != "end":
            raise self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().kind in "+-":
            op = self.tokens[self.i]
            self.i += 1
            node = Node("add" if op.kind == "+" else "sub", op.pos, None, (node, self.term()))
        return node

    def term(self) -> Node:
        node = self.factor()
        while (op := self.accept("*")) is not None:
            node = Node("mul", op.pos, None, (node, self.factor()))
        return node

    def rational(self) -> Fraction:
        num = self.take("num")
        if self.accept("/"):
            den = self.take("num")
            if int(den.text) == 0:
                raise self.error("zero denominator", den.pos)
            return Fraction(int(num.text), int(den.text))
        return Fraction(int(num.text))

    def factor(self) -> Node:
        tok = self.peek()
        if self.accept("-"):
            return Node("neg", tok.pos, None, (self.factor(),))
        if tok.kind == "num":
            return Node("num", tok.pos, self.rational())
        if self.accept("r"):
            k = 1
            if self.accept("^"):
                k = int(self.take("num").text)
            return Node("r", tok.pos, k)
        if self.accept("l"):
            self.take("(")
            sign = -1 if self.accept("-") else 1
            level = sign * int(self.take("num").text)
            self.take(")")
            exponent = self.exponent() if self.accept("^") else None
            return Node("level", tok.pos, level, () if exponent is None else (exponent,))
        if self.accept("("):
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise self.error(f"expected a number, l(n), r or '(', found {found}")

    def exponent(self) -> Node:
        tok = self.peek()
        if self.accept("-"):
            return Node("num", tok.pos, -self.rational())
        if tok.kind == "num":
            return Node("num", tok.pos, self.rational())
        if self.accept("r"):
            return Node("r", tok.pos, 1)
        if self.accept("("):
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise self.error(f"expected an exponent, found {found}")


def parse_ast(text: str) -> Node:
    return _Parser(text).parse()


def _lower_poly(node: Node, text: str) -> RPoly:
    k = node.kind
    if k == "num":
        return RPoly.constant(node.value)
    if k == "r":
        return RPoly.var() ** node.value
    if k == "neg":
        return -_lower_poly(node.children[0], text)
    if k in ("add", "sub", "mul"):
        a, b = (_lower_poly(c, text) for c in node.children)
        return a + b if k == "add" else a - b if k == "sub" else a * b
    raise ParseError("l(n) cannot appear inside an exponent", len(text[: node.pos].encode()))


def _lower_element(node: Node, text: str) -> Element:
    k = node.kind
    if k == "num":
        return Element.constant(node.value)
    if k == "level":
        r = Fraction(1)
        if node.children:
            p = _lower_poly(node.children[0], text)
            if not p.is_constant():
                raise ParseError("exponent depends on r", len(text[: node.children[0].pos].encode()))
            r = p.constant_value()
        return Element.level(node.value, r)
    if k == "neg":
        return -_lower_element(node.children[0], text)
    if k in ("add", "sub", "mul"):
        a, b = (_lower_element(c, text) for c in node.children)
        return a + b if k == "add" else a - b if k == "sub" else a * b
    raise ParseError("r is only allowed in r-forms", len(text[: node.pos].encode()))


def _has_level(node: Node) -> bool:
    return node.kind == "level" or any(_has_level(c) for c in node.children)


def _lower_rform(node: Node, text: str) -> RForm:
    if not _has_level(node):
        # A pure polynomial in r stays one coefficient instead of splitting.
        return RForm.monomial(_lower_poly(node, text))
    k = node.kind
    if k == "level":
        p = _lower_poly(node.children[0], text) if node.children else RPoly.constant(1)
        return RForm.monomial(1, {node.value: p})
    if k == "neg":
        return -_lower_rform(node.children[0], text)
    a, b = (_lower_rform(c, text) for c in node.children)
    return a + b if k == "add" else a - b if k == "sub" else a * b


def parse_element(text: str) -> Element:
    return _lower_element(parse_ast(text), text)


def parse_rform(text: str) -> RForm:
    """Parse an r-form; summands are kept as written (not reduced)."""
    return _lower_rform(parse_ast(text), text)
