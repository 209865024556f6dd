"""Recursive-descent parser for algebra expressions.

Grammar (products keep their order; nothing commutes during parsing):

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' nat]
    atom   := rational | 'w' | symbol | '(' expr ')'

Symbols: x, xp, y, yp (the oscillators), m, T00, T01, T11, Q0..Q2, L0..L2,
K12, K13, K23 and id.  'w' is the primitive cube root of unity.  A leading
minus on the whole expression is accepted so printed elements round trip.
Syntax errors carry line, column and the expected token set.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (Element, k_elt, l_elt, m_elt, normal_mul, q_elt,
                      scalar, t_elt, unit, x_elt, xp_elt, y_elt, yp_elt)
from .cyclotomic import OMEGA

__all__ = ["ParseError", "Token", "tokenize", "parse", "parse_element",
           "eval_ast", "SYMBOLS"]


class ParseError(ValueError):
    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = "%s at line %d, column %d" % (message, line, column)
        if expected:
            detail += " (expected %s)" % ", ".join(sorted(expected))
        super().__init__(detail)


class Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind, value, line, column):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column

    def __repr__(self):
        return "Token(%s, %r)" % (self.kind, self.value)


_PUNCT = set("+-*^()/")


def tokenize(text):
    toks = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch in _PUNCT:
            toks.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("number", int(text[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("symbol", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise ParseError("unexpected character %r" % ch, line, col)
    toks.append(Token("end", None, line, col))
    return toks


_SYM_BUILDERS = {
    "x": x_elt, "xp": xp_elt, "y": y_elt, "yp": yp_elt,
    "m": m_elt, "id": unit,
    "Q0": lambda: q_elt(0), "Q1": lambda: q_elt(1), "Q2": lambda: q_elt(2),
    "L0": lambda: l_elt(0), "L1": lambda: l_elt(1), "L2": lambda: l_elt(2),
    "K12": lambda: k_elt("K12"), "K13": lambda: k_elt("K13"),
    "K23": lambda: k_elt("K23"),
    "T00": lambda: t_elt(0, 0), "T01": lambda: t_elt(0, 1),
    "T11": lambda: t_elt(1, 1),
}

SYMBOLS = tuple(sorted(_SYM_BUILDERS))


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError("unexpected %s" % _describe(tok),
                             tok.line, tok.column, expected=(kind,))
        return self.advance()

    def parse_expr(self):
        node = None
        if self.peek().kind == "-":
            self.advance()
            node = ("neg", self.parse_term())
        else:
            node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.parse_term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek().kind == "*":
            self.advance()
            rhs = self.parse_factor()
            node = ("mul", node, rhs)
        return node

    def parse_factor(self):
        node = self.parse_atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("number")
            node = ("pow", node, tok.value)
        return node

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            num = tok.value
            if self.peek().kind == "/":
                self.advance()
                den = self.expect("number")
                if den.value == 0:
                    raise ParseError("zero denominator", den.line, den.column)
                return ("num", Fraction(num, den.value))
            return ("num", Fraction(num))
        if tok.kind == "symbol":
            self.advance()
            if tok.value == "w":
                return ("omega",)
            if tok.value in _SYM_BUILDERS:
                return ("sym", tok.value)
            raise ParseError("unknown symbol %r" % tok.value,
                             tok.line, tok.column,
                             expected=("w",) + SYMBOLS)
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        raise ParseError("unexpected %s" % _describe(tok), tok.line,
                         tok.column,
                         expected=("number", "symbol", "("))


def _describe(tok):
    if tok.kind == "end":
        return "end of input"
    return "token %r" % (tok.value,)


def parse(text):
    """Parse to an AST; raises ParseError with position information."""
    p = _Parser(tokenize(text))
    node = p.parse_expr()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError("trailing input %s" % _describe(tok),
                         tok.line, tok.column, expected=("end of input",))
    return node


def eval_ast(node):
    """Evaluate an AST to an Element (left-to-right within products)."""
    kind = node[0]
    if kind == "num":
        return scalar(node[1])
    if kind == "omega":
        return scalar(OMEGA)
    if kind == "sym":
        return _SYM_BUILDERS[node[1]]()
    if kind == "neg":
        return -eval_ast(node[1])
    if kind == "add":
        return eval_ast(node[1]) + eval_ast(node[2])
    if kind == "sub":
        return eval_ast(node[1]) - eval_ast(node[2])
    if kind == "mul":
        return normal_mul(eval_ast(node[1]), eval_ast(node[2]))
    if kind == "pow":
        return eval_ast(node[1]) ** node[2]
    raise AssertionError("unhandled node %r" % (node,))


def parse_element(text):
    """Parse and evaluate in one go."""
    return eval_ast(parse(text))
