"""Parser and printer for connected-sum query expressions.

Grammar (whitespace-insensitive)::

    EXPR     := TERM ('#' TERM)*
    TERM     := [INT '*'] MANIFOLD
    MANIFOLD := IDENT ['(' INT (',' INT)* ')']
              | 'conj' '(' MANIFOLD ')'

Multiplicities must be at least 1.  ``conj`` is reserved: it always
denotes orientation reversal of the inner manifold.  Parsing the printed
form of an AST yields the same AST back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

__all__ = [
    "Conj",
    "Expression",
    "ExpressionError",
    "ManifoldRef",
    "Term",
    "parse",
    "unparse",
]


class ExpressionError(ValueError):
    """Syntax error in a query expression, with line/column position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ManifoldRef:
    """A named manifold, optionally with integer parameters."""

    name: str
    params: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Conj:
    """Orientation reversal of the inner manifold."""

    inner: "ManifoldNode"


ManifoldNode = Union[ManifoldRef, Conj]


@dataclass(frozen=True)
class Term:
    multiplicity: int
    manifold: ManifoldNode


@dataclass(frozen=True)
class Expression:
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class _Token:
    kind: str  # INT, IDENT, SYMBOL, EOF
    text: str
    line: int
    column: int


_SYMBOLS = "*#(),"


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch.isspace():
            column += 1
            i += 1
            continue
        start = i
        start_column = column
        if ch.isdigit():
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("INT", text[start:i], line, start_column))
        elif ch.isalpha() or ch == "_":
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("IDENT", text[start:i], line, start_column))
        elif ch in _SYMBOLS:
            i += 1
            tokens.append(_Token("SYMBOL", ch, line, start_column))
        else:
            raise ExpressionError(f"unexpected character {ch!r}", line, column)
        column += i - start
    tokens.append(_Token("EOF", "", line, column))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, message: str):
        token = self.peek()
        raise ExpressionError(message, token.line, token.column)

    def expect_symbol(self, symbol: str) -> _Token:
        token = self.peek()
        if token.kind != "SYMBOL" or token.text != symbol:
            self.fail(f"expected {symbol!r}")
        return self.advance()

    def parse_expression(self) -> Expression:
        terms = [self.parse_term()]
        while self.peek().kind == "SYMBOL" and self.peek().text == "#":
            self.advance()
            terms.append(self.parse_term())
        if self.peek().kind != "EOF":
            self.fail(f"unexpected {self.peek().text!r}")
        return Expression(tuple(terms))

    def parse_term(self) -> Term:
        multiplicity = 1
        if self.peek().kind == "INT":
            token = self.advance()
            multiplicity = int(token.text)
            if multiplicity < 1:
                raise ExpressionError(
                    f"multiplicity must be >= 1, got {multiplicity}",
                    token.line,
                    token.column,
                )
            self.expect_symbol("*")
        return Term(multiplicity, self.parse_manifold())

    def parse_manifold(self) -> ManifoldNode:
        token = self.peek()
        if token.kind != "IDENT":
            self.fail("expected a manifold name")
        self.advance()
        if token.text == "conj":
            self.expect_symbol("(")
            inner = self.parse_manifold()
            self.expect_symbol(")")
            return Conj(inner)
        params = None
        if self.peek().kind == "SYMBOL" and self.peek().text == "(":
            self.advance()
            params = [self.parse_int()]
            while self.peek().kind == "SYMBOL" and self.peek().text == ",":
                self.advance()
                params.append(self.parse_int())
            self.expect_symbol(")")
            params = tuple(params)
        return ManifoldRef(token.text, params)

    def parse_int(self) -> int:
        token = self.peek()
        if token.kind != "INT":
            self.fail("expected an integer parameter")
        self.advance()
        return int(token.text)


def parse(text: str) -> Expression:
    """Parse a connected-sum expression such as ``3*CP(4) # conj(CP(4))``."""
    return _Parser(text).parse_expression()


def unparse(node) -> str:
    """Render an AST node back to canonical text."""
    if isinstance(node, Expression):
        return " # ".join(unparse(term) for term in node.terms)
    if isinstance(node, Term):
        body = unparse(node.manifold)
        return body if node.multiplicity == 1 else f"{node.multiplicity}*{body}"
    if isinstance(node, Conj):
        return f"conj({unparse(node.inner)})"
    if isinstance(node, ManifoldRef):
        if node.params is None:
            return node.name
        return f"{node.name}({','.join(str(p) for p in node.params)})"
    raise TypeError(f"cannot unparse {node!r}")
