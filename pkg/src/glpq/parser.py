"""Expression language for elements of every preset.

Grammar::

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" ["-"] digits)?
    atom   := ident | number | "T(" mono "," mono ")" | "(" expr ")"
    mono   := "1" | symbol ("^" ["-"] digits)? ("*" symbol ("^" ["-"] digits)?)*

Numbers are integers or ``n/m``.  Juxtaposition is not multiplication, so
``da`` is an unknown symbol.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExpressionSyntaxError, InvalidExponent, NegativeExponentOnNonInvertible, UnknownSymbol
from .torus import TorusPoint

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^(),]))")
_MONO_INDEX = {"p": 0, "q": 1, "h": 2, "zeta": 3}


@dataclass(frozen=True)
class Node:
    """AST node: kind is num, sym, torus, neg, add, sub, mul, pow."""

    kind: str
    offset: int
    value: object = None
    children: tuple = ()


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = self._lex(text)
        self.pos = 0

    @staticmethod
    def _lex(text):
        out = []
        i = 0
        n = len(text)
        while i < n:
            if text[i].isspace():
                i += 1
                continue
            m = _TOKEN.match(text, i)
            if not m or m.end() == i:
                raise ExpressionSyntaxError(f"unexpected character {text[i]!r}", _byte_offset(text, i))
            kind = m.lastgroup
            start = m.start(kind)
            out.append((kind, m.group(kind), start))
            i = m.end()
        out.append(("end", "", n))
        return out

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ExpressionSyntaxError(msg, _byte_offset(self.text, tok[2]))

    def expect(self, value):
        tok = self.take()
        if tok[0] != "op" or tok[1] != value:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise self.error(f"expected {value!r}, found {found}", tok)
        return tok

    def at(self, value):
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        if self.at("-"):
            tok = self.take()
            node = Node("neg", tok[2], children=(self.term(),))
        else:
            node = self.term()
        while self.at("+") or self.at("-"):
            tok = self.take()
            node = Node("add" if tok[1] == "+" else "sub", tok[2], children=(node, self.term()))
        return node

    def term(self):
        node = self.factor()
        while self.at("*"):
            tok = self.take()
            node = Node("mul", tok[2], children=(node, self.factor()))
        return node

    def signed_int(self):
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        tok = self.take()
        if tok[0] != "num" or "/" in tok[1]:
            raise self.error("exponent must be an integer", tok)
        return -int(tok[1]) if neg else int(tok[1])

    def factor(self):
        node = self.atom()
        if self.at("^"):
            tok = self.take()
            node = Node("pow", tok[2], self.signed_int(), (node,))
        return node

    def atom(self):
        tok = self.peek()
        kind, value, off = tok
        if kind == "num":
            self.take()
            return Node("num", off, Fraction(value))
        if kind == "id":
            self.take()
            if value == "T" and self.at("("):
                self.take()
                x1 = self.mono()
                self.expect(",")
                x2 = self.mono()
                self.expect(")")
                return Node("torus", off, (x1, x2))
            return Node("sym", off, value)
        if kind == "op" and value == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(value)
        raise self.error(f"expected a symbol, number or '(', found {found}", tok)

    def mono(self):
        exps = [0, 0, 0, 0]
        tok = self.peek()
        if tok[0] == "num" and tok[1] == "1":
            self.take()
            return tuple(exps)
        while True:
            tok = self.take()
            if tok[0] != "id":
                raise self.error("expected a torus coordinate symbol", tok)
            if tok[1] not in _MONO_INDEX:
                raise UnknownSymbol(tok[1], _byte_offset(self.text, tok[2]))
            e = 1
            if self.at("^"):
                self.take()
                e = self.signed_int()
            exps[_MONO_INDEX[tok[1]]] += e
            if not self.at("*"):
                return tuple(exps)
            self.take()


def _byte_offset(text, i):
    return len(text[:i].encode("utf-8"))


def parse(text, preset=None):
    """Parse ``text`` into an AST; with ``preset``, also resolve every symbol."""
    node = _Parser(text).parse()
    if preset is not None:
        _resolve(node, preset, text)
    return node


def _symbol_table(preset):
    alg = preset.alg
    names = {g.name for g in alg.generators if not g.torus}
    scalars = set(preset.ring.symbol_names())
    aliases = set(getattr(preset, "points", {}))
    aliases.discard("h")
    return names, scalars, aliases


def _resolve(node, preset, text):
    names, scalars, aliases = _symbol_table(preset)
    stack = [node]
    while stack:
        n = stack.pop()
        if n.kind == "sym" and n.value not in names | scalars | aliases:
            raise UnknownSymbol(n.value, _byte_offset(text, n.offset))
        if n.kind == "torus":
            if not preset.alg.has_torus:
                raise UnknownSymbol("T", _byte_offset(text, n.offset))
            if any(x[3] for x in n.value) and "zeta" not in scalars:
                raise UnknownSymbol("zeta", _byte_offset(text, n.offset))
        stack.extend(n.children)


def evaluate(node, preset, text=""):
    """Evaluate an AST to a normal-form element of ``preset``."""
    alg = preset.alg
    ring = preset.ring
    names, scalars, aliases = _symbol_table(preset)

    def ev(n):
        k = n.kind
        if k == "num":
            return alg.scalar(n.value)
        if k == "sym":
            if n.value in names:
                return alg.gen(n.value)
            if n.value in scalars:
                return alg.scalar(ring.symbol(n.value))
            if n.value in aliases:
                return preset.t(n.value)
            raise UnknownSymbol(n.value, _byte_offset(text, n.offset))
        if k == "torus":
            if not alg.has_torus:
                raise UnknownSymbol("T", _byte_offset(text, n.offset))
            return alg.torus(TorusPoint.make(ring, *n.value))
        if k == "neg":
            return -ev(n.children[0])
        if k == "add":
            return ev(n.children[0]) + ev(n.children[1])
        if k == "sub":
            return ev(n.children[0]) - ev(n.children[1])
        if k == "mul":
            return ev(n.children[0]) * ev(n.children[1])
        if k == "pow":
            base = ev(n.children[0])
            if n.value >= 0:
                return base ** n.value
            if base.is_scalar():
                c = base.scalar_value()
                if c.is_zero():
                    raise InvalidExponent(f"zero raised to {n.value}", _byte_offset(text, n.offset))
                return alg.scalar(c ** n.value)
            try:
                return base ** n.value
            except NegativeExponentOnNonInvertible as exc:
                raise InvalidExponent(str(exc), _byte_offset(text, n.offset)) from exc
        raise AssertionError(k)

    return ev(node)


def parse_element(text, preset):
    """Parse and evaluate ``text`` in ``preset``."""
    return evaluate(parse(text, preset), preset, text)


def parse_scalar(text, preset):
    x = parse_element(text, preset)
    if not x.is_scalar():
        raise ExpressionSyntaxError(f"{text!r} is not a scalar", 0)
    return x.scalar_value()


def from_json(data, preset):
    """Inverse of ``NCPoly.to_json`` for elements of ``preset``."""
    alg = preset.alg
    out = alg.zero
    for term in data["terms"]:
        items = []
        for name, val in term["mono"].items():
            g = alg.generator(name)
            if g.torus:
                x1 = _parse_mono(val[0])
                x2 = _parse_mono(val[1])
                items.append((g, TorusPoint.make(preset.ring, x1, x2)))
            else:
                items.append((g, int(val)))
        items.sort(key=lambda it: it[0].index)
        out = out + alg.element(items, parse_scalar(term["coeff"], preset))
    return out


def _parse_mono(text):
    p = _Parser(text)
    m = p.mono()
    if p.peek()[0] != "end":
        raise p.error("trailing input after monomial")
    return m
